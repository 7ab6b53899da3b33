#pragma once

#include "qie/fourier.hpp"
#include "qie/quadrature.hpp"
#include "qie/states.hpp"

#include <set>

namespace qie::measures {

inline constexpr double kBbmBound = 1.0 + 1.1447298858494001741;   // D(1 + ln pi), D = 1
inline constexpr double kFisherBound = 4.0;                        // 4 hbar^2, hbar = 1

enum class DivergenceFlag { PositionEntropyRegularized, NormDeviatesFromUnity };

struct MeasureReport {
    double S_x = 0.0;
    double S_k = 0.0;
    double bbm_sum = 0.0;
    double bbm_bound = kBbmBound;
    double bbm_margin = 0.0;
    double F_x = 0.0;
    double F_k = 0.0;
    double fisher_product = 0.0;
    double fisher_bound = kFisherBound;
    double var_x = 0.0;
    double var_k = 0.0;
    double fisher_var_ratio_x = 0.0;   // F_x / (4 var_k)
    double fisher_var_ratio_k = 0.0;   // F_k / (4 var_x)
    states::NormalizationMode mode = states::NormalizationMode::PaperFaithful;
    std::set<DivergenceFlag> divergence_flags;
    double box_L = 10.0;
};

// Shannon entropies -int rho ln rho; position side switches to box quadrature
// for non-normalizable states.
double shannon_position(const states::Wavefunction& psi, const quad::QuadratureConfig& cfg = {});
double shannon_momentum(const fourier::MomentumState& phi, const quad::QuadratureConfig& cfg = {});

// Fisher information int rho (d ln rho)^2; the quartic-PDM position integrand
// decays like 1/x^3, so line quadrature stays valid for every state.
double fisher_position(const states::Wavefunction& psi, const quad::QuadratureConfig& cfg = {});
double fisher_momentum(const fourier::MomentumState& phi, const quad::QuadratureConfig& cfg = {});

// Second central moments of the (possibly unnormalized) densities; the means
// vanish for every state here by parity. Box-regularized in position space
// for non-normalizable states.
double variance_position(const states::Wavefunction& psi, const quad::QuadratureConfig& cfg = {});
double variance_momentum(const fourier::MomentumState& phi, const quad::QuadratureConfig& cfg = {});

/// All six measures plus bounds, margins, Fisher-variance ratios and
/// divergence flags. PaperFaithful mode pairs the printed psi with the
/// printed phi; Renormalized mode pairs the unit-norm psi with its exact
/// momentum density (the printed phi where it is the exact transform, the
/// numeric transform for the PDM states).
MeasureReport full_report(const states::StateModel& model, const quad::QuadratureConfig& cfg = {});

} // namespace qie::measures
