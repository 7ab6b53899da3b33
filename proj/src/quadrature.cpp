#include "qie/quadrature.hpp"
#include "qie/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qie::quad {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kTMax = 4.0;      // |t| beyond this contributes < 1e-18 for admissible integrands
constexpr double kBaseStep = 0.5;
constexpr int kHardLevelCap = 14;

struct Node {
    double t;
    double x_line;   // sinh((pi/2) sinh t)
    double w_line;   // (pi/2) cosh t cosh((pi/2) sinh t)
    double u_box;    // tanh((pi/2) sinh t), box abscissa per unit halfwidth
    double w_box;    // (pi/2) cosh t / cosh^2((pi/2) sinh t)
};

Node make_node(double t) {
    const double s = kHalfPi * std::sinh(t);
    const double c = kHalfPi * std::cosh(t);
    const double ch = std::cosh(s);
    return {t, std::sinh(s), c * ch, std::tanh(s), c / (ch * ch)};
}

// nodes for refinement level l: level 0 holds all multiples of the base step,
// level l >= 1 holds the odd multiples of kBaseStep / 2^l; t >= 0 only, mirrored on use
const std::vector<std::vector<Node>>& node_table() {
    static const std::vector<std::vector<Node>> table = [] {
        std::vector<std::vector<Node>> levels;
        std::vector<Node> level0;
        for (int i = 0; i * kBaseStep <= kTMax + 1e-12; ++i)
            level0.push_back(make_node(i * kBaseStep));
        levels.push_back(std::move(level0));
        for (int l = 1; l <= kHardLevelCap; ++l) {
            const double h = kBaseStep / double(1 << l);
            std::vector<Node> level;
            for (long long j = 1; j * h <= kTMax + 1e-12; j += 2)
                level.push_back(make_node(double(j) * h));
            levels.push_back(std::move(level));
        }
        return levels;
    }();
    return table;
}

double eval_checked(const Integrand& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw NonFiniteIntegrand("integrand returned " + std::to_string(v) +
                                 " at x = " + std::to_string(x));
    return v;
}

// one refinement pass; sums f over the level's nodes under either map
double level_sum_line(const Integrand& f, const std::vector<Node>& nodes, bool with_origin) {
    double sum = 0.0;
    for (const Node& n : nodes) {
        if (n.t == 0.0) {
            if (with_origin) sum += eval_checked(f, 0.0) * n.w_line;
            continue;
        }
        sum += eval_checked(f, n.x_line) * n.w_line;
        sum += eval_checked(f, -n.x_line) * n.w_line;
    }
    return sum;
}

double level_sum_box(const Integrand& f, const std::vector<Node>& nodes, double L, bool with_origin) {
    double sum = 0.0;
    for (const Node& n : nodes) {
        if (n.t == 0.0) {
            if (with_origin) sum += eval_checked(f, 0.0) * L * n.w_box;
            continue;
        }
        sum += eval_checked(f, L * n.u_box) * L * n.w_box;
        sum += eval_checked(f, -L * n.u_box) * L * n.w_box;
    }
    return sum;
}

template <class LevelSum>
QuadratureResult refine(const QuadratureConfig& cfg, LevelSum&& level_sum) {
    const auto& table = node_table();
    const int max_level = std::min(cfg.max_refinement_level, kHardLevelCap);

    double h = kBaseStep;
    double running = level_sum(table[0], true);
    double estimate = running * h;

    QuadratureResult res;
    res.value = estimate;
    res.error_estimate = std::abs(estimate);
    for (int l = 1; l <= max_level; ++l) {
        running += level_sum(table[l], false);
        h *= 0.5;
        const double next = running * h;
        res.error_estimate = std::abs(next - estimate);
        estimate = next;
        res.value = estimate;
        if (l >= 3 &&
            res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate))) {
            res.converged = true;
            break;
        }
    }
    return res;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0)) throw InvalidParams("abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw InvalidParams("rel_tol must be > 0");
    if (max_refinement_level < 1) throw InvalidParams("max_refinement_level must be >= 1");
    if (!(box_halfwidth > 0.0)) throw InvalidParams("box_halfwidth must be > 0");
}

QuadratureResult integrate_line(const Integrand& f, const QuadratureConfig& cfg) {
    cfg.validate();
    return refine(cfg, [&](const std::vector<Node>& nodes, bool origin) {
        return level_sum_line(f, nodes, origin);
    });
}

QuadratureResult integrate_box(const Integrand& f, double halfwidth, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(halfwidth > 0.0)) throw InvalidParams("box halfwidth must be > 0");
    QuadratureResult res = refine(cfg, [&](const std::vector<Node>& nodes, bool origin) {
        return level_sum_box(f, nodes, halfwidth, origin);
    });
    QuadratureResult doubled = refine(cfg, [&](const std::vector<Node>& nodes, bool origin) {
        return level_sum_box(f, nodes, 2.0 * halfwidth, origin);
    });
    const double denom = std::abs(res.value);
    res.tail_fraction = denom > 0.0 ? std::abs(doubled.value - res.value) / denom
                                    : std::abs(doubled.value - res.value);
    return res;
}

} // namespace qie::quad
