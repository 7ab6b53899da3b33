#include "qie/fourier.hpp"
#include "qie/errors.hpp"

#include <cmath>
#include <numbers>

namespace qie::fourier {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxK = 50.0;

MomentumState printed_phi(const states::StateModel& model) {
    using states::StateId;
    MomentumState ms;
    ms.provenance = Provenance::PaperAnalytic;
    switch (model.id) {
    case StateId::QuarticConstMass: {
        const double A = model.amplitude;
        if (!(A > 0.0)) throw InvalidParams("A must be > 0");
        ms.amplitude = [=](double k) {
            return std::complex<double>(std::exp(-0.5 * k * k / A) / std::sqrt(kPi), 0.0);
        };
        ms.density = [=](double k) { return std::exp(-k * k / A) / kPi; };
        ms.dlog_density = [=](double k) { return -2.0 * k / A; };
        break;
    }
    case StateId::QuarticPdm: {
        const double A = model.amplitude;
        if (!(A > 0.0)) throw InvalidParams("A must be > 0");
        ms.amplitude = [=](double k) {
            return A / std::sqrt(2.0) * std::exp(-0.5 * k * k) *
                   std::exp(std::complex<double>(0.0, -k));
        };
        ms.density = [=](double k) { return 0.5 * A * A * std::exp(-k * k); };
        ms.dlog_density = [](double k) { return -2.0 * k; };
        break;
    }
    case StateId::SymWellConstMass: {
        const double lam = model.lambda;
        if (!(lam > 0.0)) throw InvalidParams("lambda must be > 0");
        const double amp = std::pow(std::sqrt(2.0 / 45.0) / kPi, 0.25);
        auto poly = [=](double k) {
            return 1.174 / std::sqrt(lam) - 0.348 / std::pow(lam, 1.5) * (lam - k * k);
        };
        ms.amplitude = [=](double k) {
            return std::complex<double>(amp * std::exp(-0.5 * k * k / lam) * poly(k), 0.0);
        };
        ms.density = [=](double k) {
            const double p = poly(k);
            return amp * amp * std::exp(-k * k / lam) * p * p;
        };
        ms.dlog_density = [=](double k) {
            return -2.0 * k / lam + 2.0 * (0.696 * k / std::pow(lam, 1.5)) / poly(k);
        };
        break;
    }
    case StateId::SymWellPdm: {
        const double lam = model.lambda;
        if (!(lam > 0.0)) throw InvalidParams("lambda must be > 0");
        const double l2 = lam * lam;
        const double l4 = l2 * l2;
        const double l6 = l4 * l2;
        auto poly = [=](double k) {
            const double k2 = k * k;
            return 1.0 + l2 * k2 / 10.0 + l4 * k2 * k2 / 126.0 + l6 * k2 * k2 * k2 / 2520.0;
        };
        auto dpoly = [=](double k) {
            const double k2 = k * k;
            return l2 * k / 5.0 + 2.0 * l4 * k * k2 / 63.0 + l6 * k * k2 * k2 / 420.0;
        };
        ms.amplitude = [=](double k) {
            const double d = 1.0 + k * k / l2;
            return std::complex<double>(
                std::exp(-0.5 * k * k) / std::sqrt(kPi * d) * poly(k), 0.0);
        };
        ms.density = [=](double k) {
            const double d = 1.0 + k * k / l2;
            const double p = poly(k);
            return std::exp(-k * k) / (kPi * d) * p * p;
        };
        ms.dlog_density = [=](double k) {
            const double d = 1.0 + k * k / l2;
            return -2.0 * k - (2.0 * k / l2) / d + 2.0 * dpoly(k) / poly(k);
        };
        break;
    }
    }
    return ms;
}

} // namespace

MomentumState analytic_phi(const states::StateModel& model, const quad::QuadratureConfig& cfg) {
    MomentumState ms = printed_phi(model);
    if (model.mode == states::NormalizationMode::Renormalized) {
        const auto norm2 = quad::integrate_line(ms.density, cfg);
        const double scale = 1.0 / std::sqrt(norm2.value);
        ms.scale = scale;
        auto amp = ms.amplitude;
        auto den = ms.density;
        ms.amplitude = [amp, scale](double k) { return scale * amp(k); };
        ms.density = [den, scale](double k) { return scale * scale * den(k); };
    }
    return ms;
}

std::complex<double> numeric_ft(const std::function<double(double)>& psi, double k,
                                const quad::QuadratureConfig& cfg, states::DecayClass decay) {
    if (std::abs(k) > kMaxK)
        throw InvalidParams("numeric_ft supports |k| <= 50");
    const double norm = 1.0 / std::sqrt(2.0 * kPi);
    auto re = [&](double x) { return std::cos(k * x) * psi(x); };
    auto im = [&](double x) { return -std::sin(k * x) * psi(x); };
    if (decay == states::DecayClass::NonNormalizable) {
        const auto r = quad::integrate_box(re, cfg.box_halfwidth, cfg);
        const auto i = quad::integrate_box(im, cfg.box_halfwidth, cfg);
        return {norm * r.value, norm * i.value};
    }
    const auto r = quad::integrate_line(re, cfg);
    const auto i = quad::integrate_line(im, cfg);
    return {norm * r.value, norm * i.value};
}

std::complex<double> numeric_ft(const states::Wavefunction& psi, double k,
                                const quad::QuadratureConfig& cfg) {
    return numeric_ft(psi.value, k, cfg, psi.decay);
}

MomentumState numeric_momentum_state(const states::Wavefunction& psi,
                                     const quad::QuadratureConfig& cfg) {
    MomentumState ms;
    ms.provenance = Provenance::NumericFT;
    ms.k_support_halfwidth = kMaxK;
    auto value = psi.value;
    auto decay = psi.decay;
    ms.amplitude = [value, cfg, decay](double k) { return numeric_ft(value, k, cfg, decay); };
    auto amp = ms.amplitude;
    // every supported state is below 1e-15 in amplitude well inside this
    // window; outside it the double-precision density is an exact zero
    ms.density = [amp](double k) { return std::abs(k) > kMaxK ? 0.0 : std::norm(amp(k)); };
    auto den = ms.density;
    ms.dlog_density = [den](double k) {
        const double h = 1e-6;
        const double lo = den(k - h);
        const double hi = den(k + h);
        if (!(lo > 0.0) || !(hi > 0.0))
            throw DerivativeUnavailable("density vanished under the finite-difference stencil");
        return (std::log(hi) - std::log(lo)) / (2.0 * h);
    };
    return ms;
}

double transform_residual(const states::StateModel& model, const quad::QuadratureConfig& cfg) {
    const double window = 10.0;
    states::StateModel faithful = model;
    faithful.mode = states::NormalizationMode::PaperFaithful;

    const MomentumState printed = analytic_phi(faithful, cfg);
    const states::Wavefunction psi = states::build_state(faithful, cfg);

    const double printed_mass = quad::integrate_box(printed.density, window, cfg).value;

    auto ft_density = [&](double k) { return std::norm(numeric_ft(psi, k, cfg)); };
    // the per-point transforms are already tolerance-limited; relax the outer
    // tolerance so the error estimator is not chasing their noise floor
    quad::QuadratureConfig outer = cfg;
    outer.abs_tol = std::max(outer.abs_tol, 1e-9);
    outer.rel_tol = std::max(outer.rel_tol, 1e-9);
    const double ft_mass = quad::integrate_box(ft_density, window, outer).value;

    auto diff2 = [&](double k) {
        const double a = printed.density(k) / printed_mass;
        const double b = ft_density(k) / ft_mass;
        return (a - b) * (a - b);
    };
    const double dist2 = quad::integrate_box(diff2, window, outer).value;
    return std::sqrt(std::max(0.0, dist2));
}

} // namespace qie::fourier
