#include "qie/measures.hpp"

#include <cmath>

namespace qie::measures {

namespace {

constexpr double kDensityFloor = 1e-300;   // rho ln rho and rho (dln rho)^2 -> 0 below this

quad::Integrand entropy_integrand(std::function<double(double)> density) {
    return [density](double t) {
        const double rho = density(t);
        if (rho < kDensityFloor) return 0.0;
        return -rho * std::log(rho);
    };
}

quad::Integrand fisher_integrand(std::function<double(double)> density,
                                 std::function<double(double)> dlog) {
    return [density, dlog](double t) {
        const double rho = density(t);
        if (rho < kDensityFloor) return 0.0;
        const double g = dlog(t);
        return rho * g * g;
    };
}

std::function<double(double)> position_density(const states::Wavefunction& psi) {
    auto value = psi.value;
    return [value](double x) {
        const double v = value(x);
        return v * v;
    };
}

} // namespace

double shannon_position(const states::Wavefunction& psi, const quad::QuadratureConfig& cfg) {
    auto f = entropy_integrand(position_density(psi));
    if (psi.decay == states::DecayClass::NonNormalizable)
        return quad::integrate_box(f, cfg.box_halfwidth, cfg).value;
    return quad::integrate_line(f, cfg).value;
}

double shannon_momentum(const fourier::MomentumState& phi, const quad::QuadratureConfig& cfg) {
    return quad::integrate_line(entropy_integrand(phi.density), cfg).value;
}

double fisher_position(const states::Wavefunction& psi, const quad::QuadratureConfig& cfg) {
    return quad::integrate_line(fisher_integrand(position_density(psi), psi.dlog_density), cfg)
        .value;
}

double fisher_momentum(const fourier::MomentumState& phi, const quad::QuadratureConfig& cfg) {
    return quad::integrate_line(fisher_integrand(phi.density, phi.dlog_density), cfg).value;
}

double variance_position(const states::Wavefunction& psi, const quad::QuadratureConfig& cfg) {
    auto density = position_density(psi);
    auto f = [density](double x) { return x * x * density(x); };
    if (psi.decay == states::DecayClass::NonNormalizable)
        return quad::integrate_box(f, cfg.box_halfwidth, cfg).value;
    return quad::integrate_line(f, cfg).value;
}

double variance_momentum(const fourier::MomentumState& phi, const quad::QuadratureConfig& cfg) {
    auto density = phi.density;
    return quad::integrate_line([density](double k) { return k * k * density(k); }, cfg).value;
}

MeasureReport full_report(const states::StateModel& model, const quad::QuadratureConfig& cfg) {
    const states::Wavefunction psi = states::build_state(model, cfg);

    // The printed phi of the two constant-mass states is the exact Fourier
    // transform of the printed psi, so it stays valid after renormalization.
    // The symwell-PDM phi is an ansatz, so its physics-mode momentum density
    // comes from the numeric transform. The quartic-PDM state has no proper
    // momentum density at all (psi is not square integrable; the transform of
    // the box truncation has non-decaying ringing), so its printed Gaussian
    // phi is kept as the only self-consistent momentum object.
    fourier::MomentumState phi;
    if (model.mode == states::NormalizationMode::Renormalized &&
        model.id == states::StateId::SymWellPdm) {
        phi = fourier::numeric_momentum_state(psi, cfg);
    } else {
        phi = fourier::analytic_phi(model, cfg);
    }

    MeasureReport rep;
    rep.mode = model.mode;
    rep.box_L = cfg.box_halfwidth;

    rep.S_x = shannon_position(psi, cfg);
    rep.S_k = shannon_momentum(phi, cfg);
    rep.bbm_sum = rep.S_x + rep.S_k;
    rep.bbm_margin = rep.bbm_sum - rep.bbm_bound;

    rep.F_x = fisher_position(psi, cfg);
    rep.F_k = fisher_momentum(phi, cfg);
    rep.fisher_product = rep.F_x * rep.F_k;

    rep.var_x = variance_position(psi, cfg);
    rep.var_k = variance_momentum(phi, cfg);
    rep.fisher_var_ratio_x = rep.F_x / (4.0 * rep.var_k);
    rep.fisher_var_ratio_k = rep.F_k / (4.0 * rep.var_x);

    if (psi.decay == states::DecayClass::NonNormalizable)
        rep.divergence_flags.insert(DivergenceFlag::PositionEntropyRegularized);

    const auto density = position_density(psi);
    const double norm2 = psi.decay == states::DecayClass::NonNormalizable
                             ? quad::integrate_box(density, cfg.box_halfwidth, cfg).value
                             : quad::integrate_line(density, cfg).value;
    if (std::abs(norm2 - 1.0) > 1e-6)
        rep.divergence_flags.insert(DivergenceFlag::NormDeviatesFromUnity);

    return rep;
}

} // namespace qie::measures
