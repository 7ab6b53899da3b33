#pragma once

#include "qie/states.hpp"

#include <vector>

namespace qie::zk {

/// Uniform symmetric grid on [-halfwidth, halfwidth], spacing 2L/(n-1).
struct Grid {
    double halfwidth = 10.0;
    int n_points = 2000;

    double h() const { return 2.0 * halfwidth / double(n_points - 1); }
    double x(int i) const { return -halfwidth + double(i) * h(); }
    void validate() const;   // halfwidth > 0, n_points >= 64
};

/// Symmetric tridiagonal discretization of the position-dependent-mass
/// Hamiltonian with the symmetrized kinetic ordering
///   T = -(1/2) m^{-1/2} d^2/dx^2 m^{-1/2}
/// assembled in flux form (1/2) D^T diag(1/m) D with midpoint masses, plus
/// the curvature terms (1/4) m''/m^2 - (3/8) m'^2/m^3 folded into the
/// effective potential. Dirichlet boundaries just outside +-halfwidth.
struct DiscreteHamiltonian {
    Grid grid;
    std::vector<double> diag;      // n
    std::vector<double> offdiag;   // n - 1

    std::vector<double> apply(const std::vector<double>& v) const;
};

DiscreteHamiltonian build_hamiltonian(const states::MassProfile& mass,
                                      const states::PotentialSpec& potential, const Grid& grid);

struct GroundState {
    double energy = 0.0;
    std::vector<double> psi;   // sum psi^2 h = 1, sign fixed positive at the center
    bool converged = false;
};

/// Lowest eigenpair: Sturm-sequence bisection for the eigenvalue, shifted
/// inverse iteration (tridiagonal LU with partial pivoting) for the vector.
GroundState ground_state(const DiscreteHamiltonian& H);

/// sum a_i b_i h over a shared grid.
double overlap(const std::vector<double>& a, const std::vector<double>& b, double h);

/// Samples an evaluable function on the grid and normalizes to sum psi^2 h = 1.
std::vector<double> sample_normalized(const std::function<double(double)>& fn, const Grid& grid);

double rayleigh_quotient(const DiscreteHamiltonian& H, const std::vector<double>& psi);

/// || H psi - E* psi || with E* the Rayleigh quotient of the sampled state:
/// how far each printed wavefunction is from an eigenvector of the
/// discretized operator.
double ode_residual(const states::StateModel& model, const states::MassProfile& mass,
                    const states::PotentialSpec& potential, const Grid& grid);

} // namespace qie::zk
