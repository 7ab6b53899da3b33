#include "qie/zk.hpp"
#include "qie/errors.hpp"
#include "qie/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qie::zk {

namespace {

// eigenvalue count below sigma via the Sturm sequence of T - sigma I
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double sigma) {
    int count = 0;
    double d = diag[0] - sigma;
    if (d < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        double denom = d;
        if (std::abs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
        d = (diag[i] - sigma) - off[i - 1] * off[i - 1] / denom;
        if (d < 0.0) ++count;
    }
    return count;
}

// solve (T - sigma I) x = b, tridiagonal LU with partial pivoting (fill-in
// limited to a second superdiagonal)
std::vector<double> shifted_solve(const std::vector<double>& diag, const std::vector<double>& off,
                                  double sigma, std::vector<double> b) {
    const size_t n = diag.size();
    std::vector<double> d0(n), d1(n, 0.0), d2(n, 0.0);
    for (size_t i = 0; i < n; ++i) d0[i] = diag[i] - sigma;
    for (size_t i = 0; i + 1 < n; ++i) d1[i] = off[i];
    std::vector<double> sub(n, 0.0);
    for (size_t i = 1; i < n; ++i) sub[i] = off[i - 1];

    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(d0[i])) {
            std::swap(d0[i], sub[i + 1]);
            std::swap(d1[i], d0[i + 1]);
            std::swap(d2[i], d1[i + 1]);
            std::swap(b[i], b[i + 1]);
        }
        double piv = d0[i];
        if (std::abs(piv) < 1e-300) piv = piv < 0.0 ? -1e-300 : 1e-300;
        const double m = sub[i + 1] / piv;
        d0[i + 1] -= m * d1[i];
        d1[i + 1] -= m * d2[i];
        b[i + 1] -= m * b[i];
    }
    std::vector<double> x(n);
    for (size_t ii = n; ii-- > 0;) {
        double v = b[ii];
        if (ii + 1 < n) v -= d1[ii] * x[ii + 1];
        if (ii + 2 < n) v -= d2[ii] * x[ii + 2];
        double piv = d0[ii];
        if (std::abs(piv) < 1e-300) piv = piv < 0.0 ? -1e-300 : 1e-300;
        x[ii] = v / piv;
    }
    return x;
}

void grid_normalize(std::vector<double>& v, double h) {
    double s = 0.0;
    for (double c : v) s += c * c;
    s = std::sqrt(s * h);
    for (double& c : v) c /= s;
}

} // namespace

void Grid::validate() const {
    if (!(halfwidth > 0.0)) throw InvalidParams("grid halfwidth must be > 0");
    if (n_points < 64) throw InvalidParams("grid needs at least 64 points");
}

std::vector<double> DiscreteHamiltonian::apply(const std::vector<double>& v) const {
    if (v.size() != diag.size()) throw GridMismatch("vector length does not match grid");
    const size_t n = v.size();
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        double s = diag[i] * v[i];
        if (i > 0) s += offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) s += offdiag[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

DiscreteHamiltonian build_hamiltonian(const states::MassProfile& mass,
                                      const states::PotentialSpec& potential, const Grid& grid) {
    grid.validate();
    const int n = grid.n_points;
    const double h = grid.h();

    DiscreteHamiltonian H;
    H.grid = grid;
    H.diag.resize(n);
    H.offdiag.resize(n - 1);

    auto inv_mass_mid = [&](double x) {
        const double m = mass.eval(x).m;
        if (!(m > 0.0)) throw SingularMass("mass profile not positive on the grid");
        return 1.0 / m;
    };

    for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        const auto md = mass.eval(x);
        if (!(md.m > 0.0)) throw SingularMass("mass profile not positive on the grid");
        const double v = potential(x);
        if (!std::isfinite(v))
            throw InvalidParams("potential not finite on the grid (x = " + std::to_string(x) + ")");
        const double curvature = 0.25 * md.d2m / (md.m * md.m) -
                                 0.375 * md.dm * md.dm / (md.m * md.m * md.m);
        const double wl = inv_mass_mid(x - 0.5 * h);
        const double wr = inv_mass_mid(x + 0.5 * h);
        H.diag[i] = 0.5 * (wl + wr) / (h * h) + v + curvature;
        if (i + 1 < n) H.offdiag[i] = -0.5 * wr / (h * h);
    }
    return H;
}

GroundState ground_state(const DiscreteHamiltonian& H) {
    const auto& d = H.diag;
    const auto& e = H.offdiag;
    const size_t n = d.size();

    // Gershgorin bracket
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(e[i - 1]);
        if (i + 1 < n) r += std::abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }

    const double scale = std::max(std::abs(lo), std::abs(hi));
    bool bisect_converged = false;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-14 * scale) {
            bisect_converged = true;
            break;
        }
    }
    const double E0 = 0.5 * (lo + hi);

    GroundState gs;
    gs.energy = E0;

    // inverse iteration at a slightly detuned shift
    const double shift = E0 - 1e-9 * std::max(1.0, scale);
    std::vector<double> v(n, 1.0);
    grid_normalize(v, H.grid.h());
    bool vec_converged = false;
    for (int it = 0; it < 50; ++it) {
        v = shifted_solve(d, e, shift, std::move(v));
        grid_normalize(v, H.grid.h());
        const auto Hv = H.apply(v);
        double num = 0.0;
        for (size_t i = 0; i < n; ++i) num += v[i] * Hv[i];
        const double theta = num * H.grid.h();
        double res = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double r = Hv[i] - theta * v[i];
            res += r * r;
        }
        res = std::sqrt(res * H.grid.h());
        if (res <= 1e-9 * std::max(1.0, std::abs(theta))) {
            vec_converged = true;
            break;
        }
    }
    if (!vec_converged)
        throw NoConvergence("inverse iteration did not settle on the ground state");

    const size_t mid = n / 2;
    if (v[mid] < 0.0)
        for (double& c : v) c = -c;

    gs.psi = std::move(v);
    gs.converged = bisect_converged && vec_converged;
    return gs;
}

double overlap(const std::vector<double>& a, const std::vector<double>& b, double h) {
    if (a.size() != b.size()) throw GridMismatch("overlap needs equal-length grid vectors");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * h;
}

std::vector<double> sample_normalized(const std::function<double(double)>& fn, const Grid& grid) {
    grid.validate();
    std::vector<double> v(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) v[i] = fn(grid.x(i));
    grid_normalize(v, grid.h());
    return v;
}

double rayleigh_quotient(const DiscreteHamiltonian& H, const std::vector<double>& psi) {
    const auto Hv = H.apply(psi);
    double num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i < psi.size(); ++i) {
        num += psi[i] * Hv[i];
        den += psi[i] * psi[i];
    }
    return num / den;
}

double ode_residual(const states::StateModel& model, const states::MassProfile& mass,
                    const states::PotentialSpec& potential, const Grid& grid) {
    const auto H = build_hamiltonian(mass, potential, grid);
    const auto psi = sample_normalized(states::build_state(model).value, grid);
    const double theta = rayleigh_quotient(H, psi);
    const auto Hv = H.apply(psi);
    double res = 0.0;
    for (size_t i = 0; i < psi.size(); ++i) {
        const double r = Hv[i] - theta * psi[i];
        res += r * r;
    }
    return std::sqrt(res * grid.h());
}

} // namespace qie::zk
