#pragma once

#include "qie/quadrature.hpp"
#include "qie/states.hpp"

#include <complex>
#include <functional>

namespace qie::fourier {

enum class Provenance { PaperAnalytic, NumericFT };

/// Momentum-space amplitude. `density` is |phi|^2 (the quantity every
/// measure consumes; phases drop out). dlog_density is analytic for the
/// closed forms and a central finite difference (h = 1e-6) for numeric
/// transforms.
struct MomentumState {
    std::function<std::complex<double>(double)> amplitude;
    std::function<double(double)> density;
    std::function<double(double)> dlog_density;
    Provenance provenance = Provenance::PaperAnalytic;
    double k_support_halfwidth = 10.0;
    double scale = 1.0;
};

/// The closed-form phi(k) for each state, verbatim for PaperFaithful mode,
/// divided by its numeric L2 norm for Renormalized mode.
MomentumState analytic_phi(const states::StateModel& model,
                           const quad::QuadratureConfig& cfg = {});

/// phi(k) = (1/sqrt(2 pi)) int e^{-ikx} psi(x) dx, real and imaginary parts
/// by separate line quadratures (box quadrature when psi is flagged
/// non-normalizable). Requires |k| <= 50.
std::complex<double> numeric_ft(const std::function<double(double)>& psi, double k,
                                const quad::QuadratureConfig& cfg = {},
                                states::DecayClass decay = states::DecayClass::Normalizable);
std::complex<double> numeric_ft(const states::Wavefunction& psi, double k,
                                const quad::QuadratureConfig& cfg = {});

/// Wraps numeric_ft as an evaluable MomentumState.
MomentumState numeric_momentum_state(const states::Wavefunction& psi,
                                     const quad::QuadratureConfig& cfg = {});

/// L2 distance between |analytic_phi|^2 and |numeric_ft|^2 over [-10, 10],
/// both rescaled to unit mass on that window.
double transform_residual(const states::StateModel& model,
                          const quad::QuadratureConfig& cfg = {});

} // namespace qie::fourier
