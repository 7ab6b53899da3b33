#pragma once

#include "qie/quadrature.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qie::states {

// hbar = c = 1 throughout; m0 defaults to 1
inline constexpr double kHBar = 1.0;

enum class MassKind { Constant, Solitonic };

/// m0 constant or the solitonic profile m(x) = m0 / (1 + x^2),
/// with closed-form first and second derivatives.
struct MassProfile {
    MassKind kind = MassKind::Constant;
    double m0 = 1.0;

    struct Derivatives {
        double m;
        double dm;
        double d2m;
    };
    Derivatives eval(double x) const;

    static MassProfile constant(double m0 = 1.0);
    static MassProfile solitonic(double m0 = 1.0);
};

enum class PotentialKind { Quartic, SymmetricWell, SymmetricWellSeries };

/// V(x) = a x^2 + b x^4, or the symmetric well V0 (1 - lx cot(lx)) / (lx)^2
/// (singularity-safe at x = 0), or its even-power Taylor truncation.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::Quartic;
    double a = 1.0;
    double b = 1.0;
    double V0 = 1.0;
    double lambda = 1.0;
    int order = 6;

    double operator()(double x) const;

    static PotentialSpec quartic(double a, double b);   // b > 0
    static PotentialSpec harmonic();                    // V = x^2, solver oracle
    static PotentialSpec symmetric_well(double V0, double lambda);
    static PotentialSpec symmetric_well_series(double V0, double lambda, int order);
};

/// Taylor coefficients of the symmetric well in powers of (lambda x)^2:
/// V0 * {1/3, 1/45, 2/945, 1/4725}, truncated at `order` in {2, 4, 6}.
std::vector<double> potential_series(double V0, double lambda, int order);

/// Physicists' Hermite polynomial H_n(u) by recurrence, n <= 30.
double hermite(int n, double u);

/// Coefficient matching for the Gaussian ansatz N exp(r x^2 + s x + q)
/// against psi'' + (A - B x^2 - C x^4) psi = 0. Matching the x^2 term gives
/// r = -A/2, s = 0; q is absorbed into the normalization. The x^4 and cross
/// terms do not cancel, so the fit also reports the L2-weighted ODE residual
/// of the unit-norm ansatz.
struct GaussianAnsatzFit {
    double r;
    double s;
    double q;
    double residual;        // sqrt of the rho-weighted squared ODE defect
    std::string residual_description;
};
GaussianAnsatzFit gaussian_ansatz_fit(double A, double B, double C);

/// <n | x^p | 0> for the unit harmonic oscillator (ladder algebra,
/// x = (a + a^dag)/sqrt(2)); exact up to floating point.
double ho_matrix_element(int n, int p);

/// First-order mixing coefficient <n|x^p|0> / (E0 - En) in natural
/// oscillator units (E0 - En = -n). n in {2,4,6}, p in {4,6}.
double perturbation_coefficient(int basis_state_n, int perturbation_power);

/// Second-state admixture for the truncated symmetric well: unperturbed
/// oscillator (V0/45)(lambda x)^2, perturbation
/// V0 [ (2/945)(lambda x)^4 + (1/4725)(lambda x)^6 ]. Returns the value that
/// plays the role of the 0.087 prefactor in the printed state,
/// i.e. -c2 / sqrt(8).
double symwell_mixing_coefficient(double V0, double lambda);

enum class StateId { QuarticConstMass, QuarticPdm, SymWellConstMass, SymWellPdm };
enum class NormalizationMode { PaperFaithful, Renormalized };
enum class DecayClass { Normalizable, NonNormalizable };

struct StateModel {
    StateId id = StateId::QuarticConstMass;
    double amplitude = 1.0;   // A, quartic family
    double lambda = 1.0;      // symmetric-well family
    NormalizationMode mode = NormalizationMode::PaperFaithful;
};

const char* state_name(StateId id);

/// Evaluable position-space state. `value` carries the mode's scale;
/// dlog_density = d/dx ln psi^2 is analytic (diverges at isolated zeros of
/// psi, where the density guard in the measures kicks in).
struct Wavefunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    std::function<double(double)> dlog_density;
    DecayClass decay = DecayClass::Normalizable;
    double scale = 1.0;   // multiplier applied to the printed closed form
};

/// Closed forms for the four ground states. Renormalized mode divides by the
/// numerically computed L2 norm (box norm over [-L, L] for the
/// non-normalizable quartic PDM state).
Wavefunction build_state(const StateModel& model, const quad::QuadratureConfig& cfg = {});

} // namespace qie::states
