#include "glk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace glk::quad {

namespace {

constexpr double half_pi = std::numbers::pi / 2;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Step of refinement level 0; level k uses base_step / 2^k.
constexpr double base_step = 0.5;
// Agreement between levels below this one is not trusted.
constexpr int min_converged_level = 3;
// Right-hand abscissas of exp-sinh stay below this.
constexpr double max_abscissa = 1e250;
// The infinite-end Cauchy test looks at [2^k, 2^(k+1)] for these k.
constexpr int far_tail_first = 40;
constexpr int cauchy_segments = 4;

struct BudgetExhausted {};

class CountingEvaluator {
public:
    CountingEvaluator(const Integrand& f, std::size_t budget) : f_(f), budget_(budget) {}

    double operator()(double x) {
        if (count_ >= budget_) throw BudgetExhausted{};
        ++count_;
        const double v = f_(x);
        if (!std::isfinite(v)) non_finite_ = true;
        return v;
    }

    std::size_t count() const noexcept { return count_; }
    bool saw_non_finite() const noexcept { return non_finite_; }

private:
    const Integrand& f_;
    std::size_t budget_;
    std::size_t count_ = 0;
    bool non_finite_ = false;
};

struct GaussRule {
    static constexpr int size = 10;
    std::array<double, size> nodes{};
    std::array<double, size> weights{};
};

GaussRule make_gauss_legendre() {
    GaussRule rule;
    constexpr int n = GaussRule::size;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss_legendre() {
    static const GaussRule rule = make_gauss_legendre();
    return rule;
}

// Integral of g(d) over d in [lo, hi] after the substitution d = e^s, which
// keeps the rule accurate across segments spanning a factor of two.
template <class G>
double log_segment(G&& g, double lo, double hi) {
    const auto& rule = gauss_legendre();
    const double s_lo = std::log(lo);
    const double s_hi = std::log(hi);
    const double mid = 0.5 * (s_lo + s_hi);
    const double rad = 0.5 * (s_hi - s_lo);
    double sum = 0.0;
    for (int i = 0; i < GaussRule::size; ++i) {
        const double d = std::exp(mid + rad * rule.nodes[i]);
        sum += rule.weights[i] * g(d) * d;
    }
    return rad * sum;
}

// Segments are ordered toward the suspect end. The end is flagged when each
// of the last segments is above tolerance and no smaller than its predecessor
// (beyond tolerance).
bool cauchy_test_fails(const std::array<double, cauchy_segments>& seg, double tol) {
    for (int i = 1; i < cauchy_segments; ++i) {
        const double cur = std::abs(seg[i]);
        const double prev = std::abs(seg[i - 1]);
        if (!(cur > tol && cur >= prev - tol)) return false;
    }
    return true;
}

// Dyadic segments [delta / 2^(j+1), delta / 2^j] of distance from a finite
// endpoint, for the last j that stay outside the clip distance.
template <class G>
bool endpoint_diverges(G&& g_of_distance, double delta, double d_min, double tol) {
    if (!(delta > 0.0) || !(d_min > 0.0)) return false;
    const int last = static_cast<int>(std::floor(std::log2(delta / d_min))) - 1;
    const int first = last - (cauchy_segments - 1);
    if (first < 0) return false;
    std::array<double, cauchy_segments> seg{};
    for (int i = 0; i < cauchy_segments; ++i) {
        const double hi = std::ldexp(delta, -(first + i));
        seg[i] = log_segment(g_of_distance, 0.5 * hi, hi);
    }
    return cauchy_test_fails(seg, tol);
}

template <class G>
bool infinite_end_diverges(G&& g, double tol) {
    std::array<double, cauchy_segments> seg{};
    for (int i = 0; i < cauchy_segments; ++i) {
        const double lo = std::ldexp(1.0, far_tail_first + i);
        seg[i] = log_segment(g, lo, 2.0 * lo);
    }
    return cauchy_test_fails(seg, tol);
}

// Mass between an endpoint and the closest evaluated node, assuming
// |f| ~ d^-alpha there. alpha is read off the two closest nodes and clamped
// below 1 so a near-1/d profile yields a large, finite estimate. Exact for
// pure power laws, within a few percent for log and log^2 profiles.
struct EdgeSamples {
    double d1 = 0.0, f1 = 0.0; // closest
    double d2 = 0.0, f2 = 0.0; // next closest

    void push(double d, double f) {
        d2 = d1;
        f2 = f1;
        d1 = d;
        f1 = f;
    }

    double sliver() const {
        if (d1 <= 0.0) return 0.0;
        const double a1 = std::abs(f1);
        const double a2 = std::abs(f2);
        double alpha = 0.0;
        if (d2 > d1 && a1 > a2 && a2 > 0.0) alpha = std::log(a1 / a2) / std::log(d2 / d1);
        alpha = std::clamp(alpha, 0.0, 0.95);
        return f1 * d1 / (1.0 - alpha);
    }
};

// Relative uncertainty charged against the sliver correction.
constexpr double sliver_uncertainty = 0.25;

struct LevelSum {
    double sum = 0.0;     // unscaled sum of w * f over this level's new nodes
    double l1 = 0.0;      // unscaled sum of |w * f|
    double sliver = 0.0;  // endpoint mass below the clip distance (already an integral)
    double tail = 0.0;    // magnitude of the truncated far tail (already an integral)
};

struct Running {
    double trapezoid = 0.0;
    double l1 = 0.0;
    double value = 0.0;
    double error_bound = inf;
};

Estimate finish(const Running& r, std::size_t evals, Status s) {
    return Estimate{r.value, r.error_bound, evals, s};
}

// Shared refinement driver. `level_sum(level, h)` returns the contributions of
// the nodes first introduced at that level.
template <class LevelFn>
Estimate refine(LevelFn&& level_sum, CountingEvaluator& eval, const Config& cfg) {
    Running best;
    try {
        double h = base_step;
        const LevelSum s0 = level_sum(0, h);
        if (eval.saw_non_finite()) return Estimate{nan, inf, eval.count(), Status::diverged};
        best.trapezoid = h * s0.sum;
        best.l1 = h * s0.l1;
        best.value = best.trapezoid + s0.sliver;

        for (int level = 1; level <= cfg.max_level; ++level) {
            h *= 0.5;
            const LevelSum s = level_sum(level, h);
            if (eval.saw_non_finite()) return Estimate{nan, inf, eval.count(), Status::diverged};

            Running next;
            next.trapezoid = 0.5 * best.trapezoid + h * s.sum;
            next.l1 = 0.5 * best.l1 + h * s.l1;
            next.value = next.trapezoid + s.sliver;
            next.error_bound = std::abs(next.value - best.value) + sliver_uncertainty * std::abs(s.sliver) +
                               s.tail + 8.0 * eps * next.l1;
            best = next;

            if (level >= std::min(min_converged_level, cfg.max_level) &&
                best.error_bound <= cfg.tolerance_for(best.value)) {
                return finish(best, eval.count(), Status::converged);
            }
        }
    } catch (const BudgetExhausted&) {
        return finish(best, eval.count(), Status::budget_exhausted);
    }
    return finish(best, eval.count(), Status::budget_exhausted);
}

} // namespace

std::string_view to_string(Status s) noexcept {
    switch (s) {
    case Status::converged: return "converged";
    case Status::budget_exhausted: return "budget_exhausted";
    case Status::diverged: return "diverged";
    }
    return "unknown";
}

void Config::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) throw std::invalid_argument("abs_tol must be positive");
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) throw std::invalid_argument("rel_tol must be positive");
    if (max_evals < 100) throw std::invalid_argument("max_evals must be at least 100");
    if (max_level < 3) throw std::invalid_argument("max_level must be at least 3");
    if (!(lower_clip > 0.0) || !(lower_clip < 1e-6))
        throw std::invalid_argument("lower_clip must lie in (0, 1e-6)");
}

double Config::tolerance_for(double value) const noexcept {
    return std::max(abs_tol, rel_tol * std::abs(value));
}

Estimate integrate_finite(const Integrand& f, double a, double b, const Config& cfg) {
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("integrate_finite: need finite a < b (" + f.label + ")");

    CountingEvaluator eval(f, cfg.max_evals);
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double d_min_a = std::max(cfg.lower_clip, 4.0 * eps * std::abs(a));
    const double d_min_b = std::max(cfg.lower_clip, 4.0 * eps * std::abs(b));

    try {
        const auto from_a = [&](double d) { return eval(a + d); };
        const auto from_b = [&](double d) { return eval(b - d); };
        if (endpoint_diverges(from_a, half, d_min_a, cfg.abs_tol) ||
            endpoint_diverges(from_b, half, d_min_b, cfg.abs_tol)) {
            return Estimate{nan, inf, eval.count(), Status::diverged};
        }
    } catch (const BudgetExhausted&) {
        return Estimate{nan, inf, eval.count(), Status::budget_exhausted};
    }

    const auto level_sum = [&](int level, double h) {
        LevelSum out;
        EdgeSamples edge_a, edge_b;
        if (level == 0) {
            const double v = eval(center);
            out.sum += half * half_pi * v;
            out.l1 += std::abs(half * half_pi * v);
        }
        const int stride = level == 0 ? 1 : 2;
        for (long j = 1;; j += stride) {
            const double t = j * h;
            const double u = half_pi * std::sinh(t);
            const double cosh_u = std::cosh(u);
            // 1 - tanh(u), without cancellation
            const double complement = 1.0 / (std::exp(u) * cosh_u);
            const double w = half * half_pi * std::cosh(t) / (cosh_u * cosh_u);
            const double d = half * complement;
            bool used = false;
            if (d >= d_min_b) {
                const double v = eval(b - d);
                out.sum += w * v;
                out.l1 += std::abs(w * v);
                edge_b.push(d, v);
                used = true;
            }
            if (d >= d_min_a) {
                const double v = eval(a + d);
                out.sum += w * v;
                out.l1 += std::abs(w * v);
                edge_a.push(d, v);
                used = true;
            }
            if (!used) break;
        }
        out.sliver = edge_a.sliver() + edge_b.sliver();
        return out;
    };

    return refine(level_sum, eval, cfg);
}

Estimate integrate_semi_infinite(const Integrand& f, const Config& cfg) {
    cfg.validate();
    CountingEvaluator eval(f, cfg.max_evals);
    const double d_min = cfg.lower_clip;

    try {
        const auto near_zero = [&](double d) { return eval(d); };
        const auto far = [&](double x) { return eval(x); };
        if (endpoint_diverges(near_zero, 1.0, d_min, cfg.abs_tol) ||
            infinite_end_diverges(far, cfg.abs_tol)) {
            return Estimate{nan, inf, eval.count(), Status::diverged};
        }
    } catch (const BudgetExhausted&) {
        return Estimate{nan, inf, eval.count(), Status::budget_exhausted};
    }

    // Right-hand range is fixed at level 0: the walk stops after two
    // consecutive negligible terms and finer levels stay inside it.
    double t_right_max = 0.0;

    const auto level_sum = [&](int level, double h) {
        LevelSum out;
        EdgeSamples edge;
        if (level == 0) {
            const double v = eval(1.0);
            out.sum += half_pi * v;
            out.l1 += std::abs(half_pi * v);
        }
        const int stride = level == 0 ? 1 : 2;
        bool left_open = true;
        bool right_open = true;
        int negligible_run = 0;
        double last_right = 0.0;
        for (long j = 1; left_open || right_open; j += stride) {
            const double t = j * h;
            const double u = half_pi * std::sinh(t);
            const double dudt = half_pi * std::cosh(t);

            if (left_open) {
                const double x = std::exp(-u);
                if (x >= d_min) {
                    const double w = x * dudt;
                    const double v = eval(x);
                    out.sum += w * v;
                    out.l1 += std::abs(w * v);
                    edge.push(x, v);
                } else {
                    left_open = false;
                }
            }

            if (right_open) {
                const bool in_range = level == 0 ? (u < std::log(max_abscissa)) : (t <= t_right_max);
                if (!in_range) {
                    right_open = false;
                } else {
                    const double x = std::exp(u);
                    const double w = x * dudt;
                    const double v = eval(x);
                    const double term = w * v;
                    out.sum += term;
                    out.l1 += std::abs(term);
                    last_right = std::abs(term);
                    if (level == 0) {
                        t_right_max = t;
                        negligible_run = std::abs(term) <= eps * out.l1 ? negligible_run + 1 : 0;
                        if (negligible_run >= 2) right_open = false;
                    }
                }
            }
        }
        out.sliver = edge.sliver();
        out.tail = h * last_right;
        return out;
    };

    return refine(level_sum, eval, cfg);
}

} // namespace glk::quad
