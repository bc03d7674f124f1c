#ifndef GLK_GLAISHER_HPP
#define GLK_GLAISHER_HPP

// Registry of representations of log A, A being the Glaisher-Kinkelin
// constant, and the machinery to evaluate and cross-check all of them.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "glk/quadrature.hpp"

namespace glk::glaisher {

/// Ordered; reports are sorted by this order.
enum class RepresentationId {
    eq1_prime_product,
    eq2_barnes_limit,
    eq8_loggamma_integral,
    eq9_xlogx,
    eq10_coth,
    eq11_exp_bracket,
    eq12_log_bracket,
    eq13_tanh,
    eq28_schaar_new,
    eq33_losch_new,
};

struct RepresentationInfo {
    RepresentationId id;
    std::string_view tag;       // e.g. "eq28_schaar_new"
    std::string_view short_tag; // e.g. "eq28"
    std::string_view description;
};

std::span<const RepresentationInfo> registry() noexcept;
const RepresentationInfo& info(RepresentationId id) noexcept;
std::string_view to_string(RepresentationId id) noexcept;

/// Accepts the full tag or the short "eqNN" form.
std::optional<RepresentationId> parse_representation(std::string_view name) noexcept;

enum class ResultStatus { converged, budget_exhausted, diverged, not_applicable };

std::string_view to_string(ResultStatus s) noexcept;
ResultStatus from_quadrature(quad::Status s) noexcept;

struct RepresentationResult {
    RepresentationId id{};
    double log_a_estimate = 0.0;
    double error_bound = 0.0;
    std::size_t evals = 0;
    ResultStatus status = ResultStatus::not_applicable;
    std::chrono::duration<double> elapsed{};

    double deviation() const noexcept;
};

constexpr double reference_log_a() noexcept { return 0.2487544770337843; }

struct SeriesParams {
    std::int64_t prime_limit = 100000;
    int barnes_n = 50;
};

/// Raw integral of an integral representation (everything but eq1, eq2),
/// before it is solved for log A. Throws std::invalid_argument otherwise.
quad::Estimate representation_integral(RepresentationId id, const quad::Config& cfg = {});

/// Evaluates one representation and solves it for log A. Quadrature failure
/// is reported through the status, never thrown.
RepresentationResult eval_representation(RepresentationId id, const quad::Config& cfg = {},
                                         const SeriesParams& params = {});

/// Sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// sum over primes p <= limit of log p / (p^2 - 1).
double prime_log_sum(std::int64_t limit);

/// Upper bound 2 (log N + 1) / N on the same sum over primes p > N.
double prime_tail_bound(std::int64_t n);

/// 12 log A = sum_p log p / (p^2 - 1) + log(2 pi) + gamma, truncated at
/// prime_limit >= 100. The error bound is the analytic tail bound over 12.
RepresentationResult prime_product_log_a(std::int64_t prime_limit);

/// log G(n+1) = sum_{k=1}^{n-1} log k!, compensated.
double log_barnes_g_successor(int n);

/// log of (2 pi)^(n/2) n^(n^2/2 - 1/12) e^(-3n^2/4 + 1/12) / G(n+1),
/// for 2 <= n <= 2000. The error bound is the empirical 1/(200 n^2).
RepresentationResult barnes_limit_log_a(int n);

enum class BarnesArgument { half, quarter };

/// G(1/2) and G(1/4) composed from A, pi, Catalan's constant and the
/// lemniscate constant.
double barnes_g_special(BarnesArgument which);

/// int_0^(1/2) [(x + 1/2) log x - x + log sqrt(2 pi)] dx = (-7 - 2 log 2 + 4 log pi) / 16
double stirling_part_integral() noexcept;

/// int_0^(1/2) log Gamma(x + 1) dx expressed through log A.
double loggamma_half_integral(double log_a) noexcept;

/// int_0^(1/2) 2x / (t^2 + x^2) dx = log(1 + 1/(4 t^2)).
double rational_inner_integral(double t);

struct Check {
    double tolerance = 0.0;
    /// False for results reported but excluded from the verdict.
    bool counted = true;
    bool passed = false;
};

struct ComparisonReport {
    double reference_log_a = 0.0;
    std::vector<RepresentationResult> results;
    std::vector<Check> checks; // parallel to results
    double max_abs_deviation = 0.0;
    bool pass = false;
    std::chrono::system_clock::time_point generated_at;

    std::string_view verdict() const noexcept { return pass ? "pass" : "fail"; }
};

/// Per-representation acceptance rule used by verify_all.
Check check_result(const RepresentationResult& r, int barnes_n);

/// Evaluates every representation (concurrently when `parallel`) and
/// assembles a report sorted by id.
ComparisonReport verify_all(const quad::Config& cfg = {}, std::int64_t prime_limit = 100000,
                            int barnes_n = 50, bool parallel = true);

} // namespace glk::glaisher

#endif // GLK_GLAISHER_HPP
