#ifndef GLK_QUADRATURE_HPP
#define GLK_QUADRATURE_HPP

// Double-exponential quadrature on finite intervals (tanh-sinh) and on
// (0, inf) (exp-sinh), with level-doubling refinement and a dyadic
// Cauchy test that flags non-integrable ends.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace glk::quad {

enum class Status { converged, budget_exhausted, diverged };

std::string_view to_string(Status s) noexcept;

struct Config {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    std::size_t max_evals = 200000;
    int max_level = 12;
    // Integrands are never evaluated closer than this to a finite endpoint.
    double lower_clip = 1e-15;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
    double tolerance_for(double value) const noexcept;
};

struct Estimate {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t evals = 0;
    Status status = Status::budget_exhausted;

    bool converged() const noexcept { return status == Status::converged; }
};

/// A real function of one variable with a label for diagnostics.
/// The callable must be deterministic and must not throw.
struct Integrand {
    std::function<double(double)> fn;
    std::string label;

    double operator()(double x) const { return fn(x); }
};

/// Integral over [a, b]. Endpoints are never evaluated; nodes cluster
/// toward both of them so integrable endpoint singularities are handled
/// without splitting.
Estimate integrate_finite(const Integrand& f, double a, double b, const Config& cfg = {});

/// Integral over (0, inf).
Estimate integrate_semi_infinite(const Integrand& f, const Config& cfg = {});

} // namespace glk::quad

#endif // GLK_QUADRATURE_HPP
