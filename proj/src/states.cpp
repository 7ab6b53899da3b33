#include "qie/states.hpp"
#include "qie/errors.hpp"

#include <cmath>
#include <numbers>

namespace qie::states {

namespace {

constexpr double kPi = std::numbers::pi;

// series coefficients of (1 - t cot t)/t^2 in powers of t^2
constexpr double kWellC0 = 1.0 / 3.0;
constexpr double kWellC2 = 1.0 / 45.0;
constexpr double kWellC4 = 2.0 / 945.0;
constexpr double kWellC6 = 1.0 / 4725.0;

double well_shape(double t) {
    // (1 - t cot t) / t^2 with the removable singularity at t = 0
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return kWellC0 + kWellC2 * t2;   // next term ~ 2e-19 at the cutover
    }
    return (1.0 - t / std::tan(t)) / (t * t);
}

} // namespace

MassProfile::Derivatives MassProfile::eval(double x) const {
    if (kind == MassKind::Constant) return {m0, 0.0, 0.0};
    const double d = 1.0 + x * x;
    return {m0 / d, -2.0 * m0 * x / (d * d), m0 * (6.0 * x * x - 2.0) / (d * d * d)};
}

MassProfile MassProfile::constant(double m0) {
    if (!(m0 > 0.0)) throw InvalidParams("m0 must be > 0");
    return {MassKind::Constant, m0};
}

MassProfile MassProfile::solitonic(double m0) {
    if (!(m0 > 0.0)) throw InvalidParams("m0 must be > 0");
    return {MassKind::Solitonic, m0};
}

double PotentialSpec::operator()(double x) const {
    switch (kind) {
    case PotentialKind::Quartic:
        return a * x * x + b * x * x * x * x;
    case PotentialKind::SymmetricWell:
        return V0 * well_shape(lambda * x);
    case PotentialKind::SymmetricWellSeries: {
        const double t2 = lambda * lambda * x * x;
        double v = kWellC0;
        if (order >= 2) v += kWellC2 * t2;
        if (order >= 4) v += kWellC4 * t2 * t2;
        if (order >= 6) v += kWellC6 * t2 * t2 * t2;
        return V0 * v;
    }
    }
    throw InvalidParams("unknown potential kind");
}

PotentialSpec PotentialSpec::quartic(double a, double b) {
    if (!(b > 0.0)) throw InvalidParams("quartic potential requires b > 0");
    PotentialSpec p;
    p.kind = PotentialKind::Quartic;
    p.a = a;
    p.b = b;
    return p;
}

PotentialSpec PotentialSpec::harmonic() {
    PotentialSpec p;
    p.kind = PotentialKind::Quartic;
    p.a = 1.0;
    p.b = 0.0;
    return p;
}

PotentialSpec PotentialSpec::symmetric_well(double V0, double lambda) {
    if (!(lambda > 0.0)) throw InvalidParams("symmetric well requires lambda > 0");
    PotentialSpec p;
    p.kind = PotentialKind::SymmetricWell;
    p.V0 = V0;
    p.lambda = lambda;
    return p;
}

PotentialSpec PotentialSpec::symmetric_well_series(double V0, double lambda, int order) {
    if (!(lambda > 0.0)) throw InvalidParams("symmetric well requires lambda > 0");
    if (order != 2 && order != 4 && order != 6)
        throw UnsupportedOrder("series order must be one of {2, 4, 6}");
    PotentialSpec p;
    p.kind = PotentialKind::SymmetricWellSeries;
    p.V0 = V0;
    p.lambda = lambda;
    p.order = order;
    return p;
}

std::vector<double> potential_series(double V0, double lambda, int order) {
    (void)lambda;  // coefficients multiply (lambda x)^{2j}; lambda itself drops out
    if (order != 2 && order != 4 && order != 6)
        throw UnsupportedOrder("series order must be one of {2, 4, 6}");
    std::vector<double> c{V0 * kWellC0, V0 * kWellC2};
    if (order >= 4) c.push_back(V0 * kWellC4);
    if (order >= 6) c.push_back(V0 * kWellC6);
    return c;
}

double hermite(int n, double u) {
    if (n < 0 || n > 30)
        throw UnsupportedOrder("hermite order must be in [0, 30]");
    if (n == 0) return 1.0;
    double hm = 1.0;          // H_0
    double h = 2.0 * u;       // H_1
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * u * h - 2.0 * double(k) * hm;
        hm = h;
        h = next;
    }
    return h;
}

GaussianAnsatzFit gaussian_ansatz_fit(double A, double B, double C) {
    if (!(A > 0.0)) throw InvalidParams("A must be > 0");
    GaussianAnsatzFit fit;
    fit.r = -A / 2.0;
    fit.s = 0.0;
    fit.q = 0.0;   // absorbed into the normalization factor

    // For psi = (A/pi)^{1/4} exp(-A x^2 / 2):
    //   psi'' + (A - B x^2 - C x^4) psi = [(A^2 - B) x^2 - C x^4] psi,
    // so the rho-weighted squared defect is a sum of Gaussian moments.
    const double m4 = 3.0 / (4.0 * A * A);
    const double m6 = 15.0 / (8.0 * A * A * A);
    const double m8 = 105.0 / (16.0 * A * A * A * A);
    const double d = A * A - B;
    const double r2 = d * d * m4 - 2.0 * d * C * m6 + C * C * m8;
    fit.residual = std::sqrt(std::max(0.0, r2));
    fit.residual_description =
        fit.residual < 1e-12
            ? "ansatz solves the reduced equation exactly (B = A^2, C = 0)"
            : "x^4 and cross terms left unmatched by the coefficient comparison";
    return fit;
}

double ho_matrix_element(int n, int p) {
    if (n < 0 || p < 0 || p > 12 || n > p + 2)
        throw UnsupportedElement("supported range: 0 <= n <= p + 2, p <= 12");
    // repeatedly apply x = (a + a^dag)/sqrt(2) to |0> in the Fock basis
    std::vector<double> v{1.0};
    for (int step = 0; step < p; ++step) {
        std::vector<double> next(v.size() + 1, 0.0);
        for (int m = 0; m < int(v.size()); ++m) {
            if (v[m] == 0.0) continue;
            if (m > 0) next[m - 1] += v[m] * std::sqrt(double(m) / 2.0);
            next[m + 1] += v[m] * std::sqrt(double(m + 1) / 2.0);
        }
        v = std::move(next);
    }
    return n < int(v.size()) ? v[n] : 0.0;
}

double perturbation_coefficient(int basis_state_n, int perturbation_power) {
    if (basis_state_n != 2 && basis_state_n != 4 && basis_state_n != 6)
        throw UnsupportedElement("basis state must be one of {2, 4, 6}");
    if (perturbation_power != 4 && perturbation_power != 6)
        throw UnsupportedElement("perturbation power must be 4 or 6");
    // E0 - En = -n in natural oscillator units
    return ho_matrix_element(basis_state_n, perturbation_power) / (-double(basis_state_n));
}

double symwell_mixing_coefficient(double V0, double lambda) {
    if (!(V0 > 0.0) || !(lambda > 0.0)) throw InvalidParams("V0 and lambda must be > 0");
    // unperturbed oscillator (V0/45)(lambda x)^2  ->  omega^2 = 2 V0 lambda^2 / 45
    const double omega = lambda * std::sqrt(2.0 * V0 / 45.0);
    const double xi2 = 1.0 / omega;   // oscillator length squared
    const double l2 = lambda * lambda;
    const double m4 = V0 * (2.0 / 945.0) * l2 * l2 * xi2 * xi2 * ho_matrix_element(2, 4);
    const double m6 = V0 * (1.0 / 4725.0) * l2 * l2 * l2 * xi2 * xi2 * xi2 * ho_matrix_element(2, 6);
    const double c2 = (m4 + m6) / (-2.0 * omega);
    // psi_2 = psi_0 H_2(u)/sqrt(8); the printed form factors as [1 - coeff (4u^2 - 2)]
    return -c2 / std::sqrt(8.0);
}

const char* state_name(StateId id) {
    switch (id) {
    case StateId::QuarticConstMass: return "quartic-const";
    case StateId::QuarticPdm: return "quartic-pdm";
    case StateId::SymWellConstMass: return "symwell-const";
    case StateId::SymWellPdm: return "symwell-pdm";
    }
    return "?";
}

namespace {

Wavefunction quartic_const_mass(double A) {
    const double amp = std::sqrt(A / kPi);
    Wavefunction w;
    w.value = [=](double x) { return amp * std::exp(-0.5 * A * x * x); };
    w.derivative = [=](double x) { return -A * x * amp * std::exp(-0.5 * A * x * x); };
    w.dlog_density = [=](double x) { return -2.0 * A * x; };
    return w;
}

Wavefunction quartic_pdm(double A) {
    Wavefunction w;
    w.value = [=](double x) {
        const double d = 1.0 + x * x;
        return A * std::pow(d, -0.25) * std::exp(-0.5 * x * x / d);
    };
    w.derivative = [=](double x) {
        const double d = 1.0 + x * x;
        const double dlog_psi = -0.5 * x * (3.0 + x * x) / (d * d);
        return A * std::pow(d, -0.25) * std::exp(-0.5 * x * x / d) * dlog_psi;
    };
    w.dlog_density = [](double x) {
        const double d = 1.0 + x * x;
        return -x * (3.0 + x * x) / (d * d);
    };
    w.decay = DecayClass::NonNormalizable;   // density ~ A^2 e^{-1} / |x|
    return w;
}

Wavefunction symwell_const_mass(double lambda) {
    const double amp = std::pow(std::sqrt(2.0 / 45.0) / kPi, 0.25);
    Wavefunction w;
    w.value = [=](double x) {
        const double poly = 1.174 - 0.348 * lambda * x * x;
        return amp * std::exp(-0.5 * lambda * x * x) * poly;
    };
    w.derivative = [=](double x) {
        const double poly = 1.174 - 0.348 * lambda * x * x;
        const double dpoly = -0.696 * lambda * x;
        return amp * std::exp(-0.5 * lambda * x * x) * (dpoly - lambda * x * poly);
    };
    w.dlog_density = [=](double x) {
        const double poly = 1.174 - 0.348 * lambda * x * x;
        return -2.0 * lambda * x - 1.392 * lambda * x / poly;
    };
    return w;
}

Wavefunction symwell_pdm(double lambda) {
    const double l2 = lambda * lambda;
    const double l4 = l2 * l2;
    const double l6 = l4 * l2;
    const double amp = 1.0 / std::sqrt(kPi);
    auto poly = [=](double x) {
        const double x2 = x * x;
        return 1.0 - l2 * x2 / 10.0 + l4 * x2 * x2 / 126.0 - l6 * x2 * x2 * x2 / 2520.0;
    };
    auto dpoly = [=](double x) {
        const double x2 = x * x;
        return -l2 * x / 5.0 + 2.0 * l4 * x * x2 / 63.0 - l6 * x * x2 * x2 / 420.0;
    };
    Wavefunction w;
    w.value = [=](double x) {
        const double d = 1.0 + x * x;
        return amp * std::exp(-0.5 * x * x) / std::sqrt(d) * poly(x);
    };
    w.derivative = [=](double x) {
        const double d = 1.0 + x * x;
        return amp * std::exp(-0.5 * x * x) / std::sqrt(d) *
               (dpoly(x) - x * poly(x) - x * poly(x) / d);
    };
    w.dlog_density = [=](double x) {
        const double d = 1.0 + x * x;
        return -2.0 * x - 2.0 * x / d + 2.0 * dpoly(x) / poly(x);
    };
    return w;
}

} // namespace

Wavefunction build_state(const StateModel& model, const quad::QuadratureConfig& cfg) {
    Wavefunction w;
    switch (model.id) {
    case StateId::QuarticConstMass:
        if (!(model.amplitude > 0.0)) throw InvalidParams("A must be > 0");
        w = quartic_const_mass(model.amplitude);
        break;
    case StateId::QuarticPdm:
        if (!(model.amplitude > 0.0)) throw InvalidParams("A must be > 0");
        w = quartic_pdm(model.amplitude);
        break;
    case StateId::SymWellConstMass:
        if (!(model.lambda > 0.0)) throw InvalidParams("lambda must be > 0");
        w = symwell_const_mass(model.lambda);
        break;
    case StateId::SymWellPdm:
        if (!(model.lambda > 0.0)) throw InvalidParams("lambda must be > 0");
        w = symwell_pdm(model.lambda);
        break;
    }

    if (model.mode == NormalizationMode::Renormalized) {
        auto printed = w.value;
        auto density = [printed](double x) {
            const double v = printed(x);
            return v * v;
        };
        const auto norm2 = w.decay == DecayClass::NonNormalizable
                               ? quad::integrate_box(density, cfg.box_halfwidth, cfg)
                               : quad::integrate_line(density, cfg);
        const double scale = 1.0 / std::sqrt(norm2.value);
        w.scale = scale;
        auto dv = w.derivative;
        w.value = [printed, scale](double x) { return scale * printed(x); };
        w.derivative = [dv, scale](double x) { return scale * dv(x); };
    }
    return w;
}

} // namespace qie::states
