#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qie/errors.hpp"
#include "qie/quadrature.hpp"
#include "qie/states.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <vector>

using namespace qie;
using quad::integrate_box;
using quad::integrate_line;
using quad::QuadratureConfig;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// independent oracle: composite trapezoid on [-w, w]
double trapezoid(const std::function<double(double)>& f, double w, int n) {
    const double h = 2.0 * w / n;
    double s = 0.5 * (f(-w) + f(w));
    for (int i = 1; i < n; ++i) s += f(-w + i * h);
    return s * h;
}

} // namespace

TEST_CASE("gaussian integral over the line") {
    auto r = integrate_line([](double x) { return std::exp(-x * x); });
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(kSqrtPi).epsilon(1e-12));
}

TEST_CASE("odd integrand vanishes") {
    auto r = integrate_line([](double x) { return x * std::exp(-x * x); });
    CHECK(r.converged);
    CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("normalized gaussian density, A = 3.5") {
    const double A = 3.5;
    auto density = [A](double x) { return A / std::numbers::pi * std::exp(-A * x * x); };
    const double expected = std::sqrt(A / std::numbers::pi);
    auto r = integrate_line(density);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-12));
    // trapezoid cross-check
    CHECK(r.value == doctest::Approx(trapezoid(density, 12.0, 200000)).epsilon(1e-12));
}

TEST_CASE("box: gaussian at L = 10 matches the line result") {
    auto f = [](double x) { return std::exp(-x * x); };
    auto r = integrate_box(f, 10.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - kSqrtPi) < 1e-12);
    CHECK(r.tail_fraction < 1e-15);
}

TEST_CASE("box: log-divergent integrand shows its tail") {
    auto f = [](double x) { return 1.0 / std::sqrt(1.0 + x * x); };
    auto r = integrate_box(f, 10.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0 * std::asinh(10.0)).epsilon(1e-12));  // 5.9964459...
    CHECK(r.tail_fraction > 0.1);
}

TEST_CASE("box: gaussian-damped log factor") {
    auto f = [](double x) { return std::exp(-x * x) * std::log(1.0 + x * x); };
    auto r = integrate_box(f, 10.0);
    CHECK(r.converged);
    // frozen from an adaptive reference integration
    CHECK(r.value == doctest::Approx(0.5866187465823502).epsilon(1e-11));
}

TEST_CASE("linearity over a family of gaussians") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> width(0.5, 4.0);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    QuadratureConfig cfg;
    for (int trial = 0; trial < 20; ++trial) {
        const double a = width(rng), b = width(rng);
        const double alpha = coeff(rng), beta = coeff(rng);
        auto f = [a](double x) { return std::exp(-a * x * x); };
        auto g = [b](double x) { return std::cos(x) * std::exp(-b * x * x); };
        auto combo = [&](double x) { return alpha * f(x) + beta * g(x); };
        const double lhs = integrate_line(combo, cfg).value;
        const double rhs =
            alpha * integrate_line(f, cfg).value + beta * integrate_line(g, cfg).value;
        CHECK(std::abs(lhs - rhs) < 10.0 * cfg.abs_tol);
    }
}

TEST_CASE("odd integrands vanish across shapes") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> width(0.5, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = width(rng);
        const int p = 1 + 2 * (trial % 3);
        auto f = [a, p](double x) { return std::pow(x, p) * std::exp(-a * x * x); };
        CHECK(std::abs(integrate_line(f).value) < 1e-10);
    }
}

TEST_CASE("box consistency for decaying integrands") {
    auto f = [](double x) { return std::exp(-x * x); };
    const double line = integrate_line(f).value;
    for (double L : {8.0, 10.0, 16.0}) {
        CHECK(std::abs(integrate_box(f, L).value - line) < 1e-10);
    }
}

TEST_CASE("monotone regularization of the quartic-PDM density") {
    states::StateModel m;
    m.id = states::StateId::QuarticPdm;
    m.amplitude = 1.0;
    auto psi = states::build_state(m);
    auto rho = [&](double x) {
        const double v = psi.value(x);
        return v * v;
    };
    const double n10 = integrate_box(rho, 10.0).value;
    const double n20 = integrate_box(rho, 20.0).value;
    const double n40 = integrate_box(rho, 40.0).value;
    CHECK(n10 < n20);
    CHECK(n20 < n40);
    // log divergence: each doubling adds roughly 2 e^{-1} ln 2, not a fading tail
    const double inc1 = n20 - n10;
    const double inc2 = n40 - n20;
    CHECK(inc1 > 0.4);
    CHECK(inc2 > 0.8 * inc1);
}

TEST_CASE("non-finite integrand throws") {
    CHECK_THROWS_AS(integrate_line([](double x) { return 1.0 / x; }), NonFiniteIntegrand);
    CHECK_THROWS_AS(
        integrate_box([](double x) { return std::sqrt(x); }, 2.0),  // NaN for x < 0
        NonFiniteIntegrand);
}

TEST_CASE("non-decaying integrand is flagged, not thrown") {
    auto r = integrate_line([](double x) { return 1.0 / std::sqrt(1.0 + x * x); });
    CHECK_FALSE(r.converged);
}

TEST_CASE("converged implies the reported tolerance") {
    QuadratureConfig cfg;
    auto r = integrate_line([](double x) { return std::exp(-2.0 * x * x); }, cfg);
    CHECK(r.converged);
    CHECK(r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
}

TEST_CASE("config validation") {
    QuadratureConfig cfg;
    cfg.abs_tol = -1.0;
    CHECK_THROWS_AS(integrate_line([](double) { return 0.0; }, cfg), InvalidParams);
    CHECK_THROWS_AS(integrate_box([](double) { return 0.0; }, -1.0), InvalidParams);
}

TEST_CASE("concurrent integrations match sequential bit for bit") {
    auto f = [](double x) { return std::exp(-1.3 * x * x) * std::cos(0.7 * x); };
    const double sequential = integrate_line(f).value;
    std::vector<std::future<double>> futs;
    for (int i = 0; i < 8; ++i)
        futs.push_back(std::async(std::launch::async, [&] { return integrate_line(f).value; }));
    for (auto& fu : futs) CHECK(fu.get() == sequential);
}
