#pragma once

#include <functional>

namespace qie::quad {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_refinement_level = 12;
    double box_halfwidth = 10.0;   // only used by box-regularized integrals

    void validate() const;  // throws InvalidParams on a bad field
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    double tail_fraction = 0.0;    // box mode: |I[-2L,2L] - I[-L,L]| / |I[-L,L]|
};

using Integrand = std::function<double(double)>;

/// Double-exponential quadrature over the whole real line,
/// x = sinh((pi/2) sinh t). Non-decaying integrands come back with
/// converged == false; a NaN/inf integrand value throws NonFiniteIntegrand.
QuadratureResult integrate_line(const Integrand& f, const QuadratureConfig& cfg = {});

/// Tanh-sinh quadrature on [-halfwidth, halfwidth], with a tail estimate
/// taken against the doubled box.
QuadratureResult integrate_box(const Integrand& f, double halfwidth,
                               const QuadratureConfig& cfg = {});

} // namespace qie::quad
