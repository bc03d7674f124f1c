#include "glk/glaisher.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>

#include "glk/binet.hpp"
#include "glk/specialfn.hpp"
#include "glk/summation.hpp"

namespace glk::glaisher {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr double two_pi = 2.0 * pi;

constexpr double integral_tolerance = 1e-9;
constexpr double barnes_tolerance = 1e-3;
constexpr int barnes_min_counted_n = 20;
constexpr int barnes_max_n = 2000;

constexpr std::array<RepresentationInfo, 10> representations{{
    {RepresentationId::eq1_prime_product, "eq1_prime_product", "eq1",
     "Euler product over primes: prod p^(1/(p^2-1)) = A^12 / (2 pi e^gamma)"},
    {RepresentationId::eq2_barnes_limit, "eq2_barnes_limit", "eq2",
     "limit of (2 pi)^(n/2) n^(n^2/2 - 1/12) e^(-3n^2/4 + 1/12) / G(n+1)"},
    {RepresentationId::eq8_loggamma_integral, "eq8_loggamma_integral", "eq8",
     "integral of log Gamma(x+1) over [0, 1/2]"},
    {RepresentationId::eq9_xlogx, "eq9_xlogx", "eq9", "1/12 - 2 int_0^inf t log t / (e^(2 pi t) - 1) dt"},
    {RepresentationId::eq10_coth, "eq10_coth", "eq10",
     "int_0^inf (1 - e^(-t/2)) (t coth(t/2) - 2) / t^3 dt"},
    {RepresentationId::eq11_exp_bracket, "eq11_exp_bracket", "eq11",
     "int_0^inf e^(-t) [(8 - 3t) e^t - 8 e^(t/2) - t] / (t^2 (e^t - 1)) dt"},
    {RepresentationId::eq12_log_bracket, "eq12_log_bracket", "eq12",
     "int_0^inf [e^(-t)/8 - (1+t)^(-3/2) log^-2(1+t) - (log(1+t) - 2) / (2 (1+t) log^2(1+t))] dt / t"},
    {RepresentationId::eq13_tanh, "eq13_tanh", "eq13",
     "int_0^inf [tanh(t/4)/t - e^(-t)/4] dt, not integrable: the bracket decays like 1/t"},
    {RepresentationId::eq28_schaar_new, "eq28_schaar_new", "eq28",
     "int_0^inf [pi/4 - arctan(pi/t)/2 + (t/4pi) log(1 + pi^2/t^2)] / (e^t - 1) dt"},
    {RepresentationId::eq33_losch_new, "eq33_losch_new", "eq33",
     "int_0^inf log(1 - e^(-2 pi t)) log(1 + 1/(4 t^2)) dt"},
}};

template <std::size_t N>
double horner(const std::array<double, N>& c, double t) {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
}

// poisson_exp_bracket: coefficients of t^0 .. t^17
constexpr std::array<double, 18> poisson_exp_bracket_series = {
    -5.00000000000000000e-01,
    8.33333333333333287e-02,
    0.00000000000000000e+00,
    -1.38888888888888894e-03,
    0.00000000000000000e+00,
    3.30687830687830710e-05,
    0.00000000000000000e+00,
    -8.26719576719576754e-07,
    0.00000000000000000e+00,
    2.08767569878681002e-08,
    0.00000000000000000e+00,
    -5.28419013868749322e-10,
    0.00000000000000000e+00,
    1.33825365306846789e-11,
    0.00000000000000000e+00,
    -3.38968029632258272e-13,
    0.00000000000000000e+00,
    8.58606205627784517e-15,
};

// coth_integrand: coefficients of t^0 .. t^17
constexpr std::array<double, 18> coth_integrand_series = {
    8.33333333333333287e-02,
    -2.08333333333333322e-02,
    2.08333333333333330e-03,
    -8.68055555555555589e-05,
    1.86011904761904779e-05,
    -4.65029761904761947e-06,
    8.61166225749559141e-08,
    7.85814180996472604e-08,
    2.44649495951579273e-10,
    -2.12437312317954664e-09,
    4.70479799906883229e-13,
    5.35086758144096310e-11,
    6.53444166537337815e-16,
    -1.35587330827331392e-12,
    6.86390931236699365e-19,
    3.43440969541359073e-14,
    5.64466226345969902e-22,
    -8.69946664672293547e-16,
};

// exp_bracket_integrand: coefficients of t^0 .. t^17
constexpr std::array<double, 18> exp_bracket_integrand_series = {
    -3.33333333333333315e-01,
    3.12500000000000000e-01,
    -1.40277777777777779e-01,
    4.01041666666666699e-02,
    -8.29199735449735395e-03,
    1.36331225198412691e-03,
    -1.94330770502645510e-04,
    2.50922309027777767e-05,
    -2.83708603478568771e-06,
    2.67022692356351197e-07,
    -2.29343548383675280e-08,
    2.30162638779446506e-09,
    -2.14114983540955970e-10,
    6.04715318114690510e-12,
    5.91161579669966972e-13,
    1.85171070574947379e-13,
    -3.71557007128532110e-14,
    -3.32359465485770486e-15,
};

// log_bracket_integrand: coefficients of t^0 .. t^17
constexpr std::array<double, 18> log_bracket_integrand_series = {
    2.08333333333333322e-02,
    -9.63541666666666713e-02,
    1.47829861111111099e-01,
    -1.71462673611111116e-01,
    1.82466827876984122e-01,
    -1.89342906487681872e-01,
    1.94877005010265114e-01,
    -1.99796885603109153e-01,
    2.04304904490239442e-01,
    -2.08485876887863103e-01,
    2.12393233068874865e-01,
    -2.16066763486745667e-01,
    2.19537691514612054e-01,
    -2.22831107526470451e-01,
    2.25967515928160251e-01,
    -2.28963910075013738e-01,
    2.31834545674469178e-01,
    -2.34591510097320960e-01,
};

// Cut-over points between Taylor series and direct evaluation, picked where
// the direct form has lost less than ~1e-13 relative accuracy.
constexpr double coth_series_cutoff = 0.5;
constexpr double exp_bracket_series_cutoff = 0.2;
constexpr double log_bracket_series_cutoff = 0.1;

double coth_integrand(double t) {
    if (t < coth_series_cutoff) return horner(coth_integrand_series, t);
    return -std::expm1(-0.5 * t) * (t / std::tanh(0.5 * t) - 2.0) / (t * t * t);
}

double exp_bracket_integrand(double t) {
    if (t < exp_bracket_series_cutoff) return horner(exp_bracket_integrand_series, t);
    return ((8.0 - 3.0 * t) - 8.0 * std::exp(-0.5 * t) - t * std::exp(-t)) / (t * t * std::expm1(t));
}

double log_bracket_integrand(double t) {
    if (t < log_bracket_series_cutoff) return horner(log_bracket_integrand_series, t);
    // The two log terms share the denominator 2 (1+t) L^2; their numerator
    // 2 (1 - 1/sqrt(1+t)) - L is O(t^2) and is formed without cancellation
    // against O(1) quantities.
    const double L = std::log1p(t);
    const double s = std::sqrt(1.0 + t);
    const double numerator = 2.0 * t / (s * (s + 1.0)) - L;
    const double bracket = std::exp(-t) / 8.0 + numerator / (2.0 * (1.0 + t) * L * L);
    return bracket / t;
}

struct IntegralForm {
    double offset;
    double factor;
    bool finite_half_interval; // [0, 1/2] rather than (0, inf)
    std::function<double(double)> integrand;
};

IntegralForm integral_form(RepresentationId id, double clip) {
    const double log_pi = std::log(pi);
    const double common_offset = 1.0 / 3.0 + 7.0 / 36.0 * ln2 - log_pi / 6.0;
    switch (id) {
    case RepresentationId::eq8_loggamma_integral:
        return {2.0 / 3.0 * (0.5 + 7.0 / 24.0 * ln2 - 0.25 * log_pi), 2.0 / 3.0, true,
                [](double x) { return special::log_gamma(x + 1.0); }};
    case RepresentationId::eq9_xlogx:
        return {1.0 / 12.0, -2.0, false, [clip](double t) {
                    if (t < clip) return 0.0;
                    return t * std::log(t) / std::expm1(two_pi * t);
                }};
    case RepresentationId::eq10_coth:
        return {ln2 / 9.0 + 1.0 / 24.0, 1.0 / 3.0, false, coth_integrand};
    case RepresentationId::eq11_exp_bracket:
        return {common_offset, 1.0 / 12.0, false, exp_bracket_integrand};
    case RepresentationId::eq12_log_bracket:
        return {common_offset, 2.0 / 3.0, false, log_bracket_integrand};
    case RepresentationId::eq13_tanh:
        // Left uncorrected on purpose; it behaves like 1/t at infinity.
        return {ln2 / 36.0, 1.0 / 3.0, false, [](double t) { return std::tanh(0.25 * t) / t - 0.25 * std::exp(-t); }};
    case RepresentationId::eq28_schaar_new:
        return {ln2 / 9.0 + 1.0 / 24.0, 2.0 / (3.0 * pi), false,
                [](double t) { return binet::inner_arctan_integral(t) / std::expm1(t); }};
    case RepresentationId::eq33_losch_new:
        return {1.0 / 24.0 + ln2 / 9.0, -1.0 / (3.0 * pi), false, [](double t) {
                    return std::log(-std::expm1(-two_pi * t)) * std::log1p(1.0 / (4.0 * t * t));
                }};
    case RepresentationId::eq1_prime_product:
    case RepresentationId::eq2_barnes_limit:
        break;
    }
    throw std::invalid_argument("representation " + std::string(to_string(id)) + " is not an integral");
}

using Clock = std::chrono::steady_clock;

} // namespace

std::span<const RepresentationInfo> registry() noexcept { return representations; }

const RepresentationInfo& info(RepresentationId id) noexcept {
    return representations[static_cast<std::size_t>(id)];
}

std::string_view to_string(RepresentationId id) noexcept { return info(id).tag; }

std::optional<RepresentationId> parse_representation(std::string_view name) noexcept {
    for (const auto& r : representations)
        if (r.tag == name || r.short_tag == name) return r.id;
    return std::nullopt;
}

std::string_view to_string(ResultStatus s) noexcept {
    switch (s) {
    case ResultStatus::converged: return "converged";
    case ResultStatus::budget_exhausted: return "budget_exhausted";
    case ResultStatus::diverged: return "diverged";
    case ResultStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

ResultStatus from_quadrature(quad::Status s) noexcept {
    switch (s) {
    case quad::Status::converged: return ResultStatus::converged;
    case quad::Status::budget_exhausted: return ResultStatus::budget_exhausted;
    case quad::Status::diverged: return ResultStatus::diverged;
    }
    return ResultStatus::diverged;
}

double RepresentationResult::deviation() const noexcept {
    return std::abs(log_a_estimate - reference_log_a());
}

quad::Estimate representation_integral(RepresentationId id, const quad::Config& cfg) {
    const IntegralForm form = integral_form(id, cfg.lower_clip);
    quad::Integrand f{form.integrand, std::string(to_string(id))};
    return form.finite_half_interval ? quad::integrate_finite(f, 0.0, 0.5, cfg)
                                     : quad::integrate_semi_infinite(f, cfg);
}

RepresentationResult eval_representation(RepresentationId id, const quad::Config& cfg, const SeriesParams& params) {
    if (id == RepresentationId::eq1_prime_product) return prime_product_log_a(params.prime_limit);
    if (id == RepresentationId::eq2_barnes_limit) return barnes_limit_log_a(params.barnes_n);

    const auto start = Clock::now();
    const IntegralForm form = integral_form(id, cfg.lower_clip);
    const quad::Estimate est = representation_integral(id, cfg);

    RepresentationResult r;
    r.id = id;
    r.log_a_estimate = form.offset + form.factor * est.value;
    r.error_bound = std::abs(form.factor) * est.error_bound;
    r.evals = est.evals;
    r.status = from_quadrature(est.status);
    r.elapsed = Clock::now() - start;
    return r;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::int64_t m = p * p; m <= n; m += p) composite[m] = true;
    }
    return primes;
}

double prime_log_sum(std::int64_t limit) {
    CompensatedSum s;
    for (const std::int64_t p : primes_up_to(limit)) {
        const double pd = static_cast<double>(p);
        s += std::log(pd) / ((pd - 1.0) * (pd + 1.0));
    }
    return s.value();
}

double prime_tail_bound(std::int64_t n) {
    const double nd = static_cast<double>(n);
    return 2.0 * (std::log(nd) + 1.0) / nd;
}

RepresentationResult prime_product_log_a(std::int64_t prime_limit) {
    if (prime_limit < 100) throw std::invalid_argument("prime_product_log_a: prime_limit must be at least 100");
    const auto start = Clock::now();
    const auto& c = special::constants();

    RepresentationResult r;
    r.id = RepresentationId::eq1_prime_product;
    r.log_a_estimate = (prime_log_sum(prime_limit) + c.log_2pi.value + c.gamma_euler.value) / 12.0;
    r.error_bound = prime_tail_bound(prime_limit) / 12.0;
    r.evals = 0;
    r.status = ResultStatus::not_applicable;
    r.elapsed = Clock::now() - start;
    return r;
}

double log_barnes_g_successor(int n) {
    if (n < 1) throw std::domain_error("log_barnes_g_successor: n must be positive");
    CompensatedSum s;
    for (int k = 1; k <= n - 1; ++k) s += special::log_gamma(k + 1.0);
    return s.value();
}

RepresentationResult barnes_limit_log_a(int n) {
    if (n < 2) throw std::invalid_argument("barnes_limit_log_a: n must be at least 2");
    if (n > barnes_max_n) throw std::overflow_error("barnes_limit_log_a: n above 2000 is not supported");
    const auto start = Clock::now();
    const double nd = n;
    const auto& c = special::constants();

    CompensatedSum s;
    s += 0.5 * nd * c.log_2pi.value;
    s += (0.5 * nd * nd - 1.0 / 12.0) * std::log(nd);
    s += -0.75 * nd * nd;
    s += 1.0 / 12.0;
    s += -log_barnes_g_successor(n);

    RepresentationResult r;
    r.id = RepresentationId::eq2_barnes_limit;
    r.log_a_estimate = s.value();
    r.error_bound = 1.0 / (200.0 * nd * nd);
    r.evals = 0;
    r.status = ResultStatus::not_applicable;
    r.elapsed = Clock::now() - start;
    return r;
}

double barnes_g_special(BarnesArgument which) {
    const auto& c = special::constants();
    const double log_a = c.log_A.value;
    const double log_pi = std::log(pi);
    switch (which) {
    case BarnesArgument::half:
        return std::exp(ln2 / 24.0 + 0.125 - 1.5 * log_a - 0.25 * log_pi);
    case BarnesArgument::quarter: {
        const double catalan = special::dirichlet_beta_2();
        const double lemniscate = special::lemniscate_constant();
        return std::exp(3.0 / 32.0 - catalan / (4.0 * pi) - 9.0 / 16.0 * ln2 - 9.0 / 8.0 * log_a -
                        3.0 / 16.0 * log_pi - 3.0 / 8.0 * std::log(lemniscate));
    }
    }
    throw std::invalid_argument("barnes_g_special: unknown argument");
}

double stirling_part_integral() noexcept {
    return (-7.0 - 2.0 * ln2 + 4.0 * std::log(pi)) / 16.0;
}

double loggamma_half_integral(double log_a) noexcept {
    return -0.5 - 7.0 / 24.0 * ln2 + 0.25 * std::log(pi) + 1.5 * log_a;
}

double rational_inner_integral(double t) {
    if (!(t > 0.0)) throw std::domain_error("rational_inner_integral: t must be positive");
    return std::log1p(1.0 / (4.0 * t * t));
}

Check check_result(const RepresentationResult& r, int barnes_n) {
    Check c;
    switch (r.id) {
    case RepresentationId::eq13_tanh:
        c.tolerance = 0.0;
        c.passed = r.status == ResultStatus::diverged;
        return c;
    case RepresentationId::eq1_prime_product:
        c.tolerance = r.error_bound;
        break;
    case RepresentationId::eq2_barnes_limit:
        c.tolerance = barnes_tolerance;
        c.counted = barnes_n >= barnes_min_counted_n;
        break;
    default:
        c.tolerance = integral_tolerance;
        if (r.status != ResultStatus::converged) {
            c.passed = false;
            return c;
        }
        break;
    }
    c.passed = std::isfinite(r.log_a_estimate) && r.deviation() <= c.tolerance;
    return c;
}

ComparisonReport verify_all(const quad::Config& cfg, std::int64_t prime_limit, int barnes_n, bool parallel) {
    cfg.validate();
    const SeriesParams params{prime_limit, barnes_n};

    ComparisonReport report;
    report.reference_log_a = reference_log_a();
    report.results.resize(representations.size());

    if (parallel) {
        std::vector<std::future<RepresentationResult>> pending;
        pending.reserve(representations.size());
        for (const auto& r : representations)
            pending.push_back(std::async(std::launch::async, [&cfg, &params, id = r.id] {
                return eval_representation(id, cfg, params);
            }));
        for (std::size_t i = 0; i < pending.size(); ++i) report.results[i] = pending[i].get();
    } else {
        for (std::size_t i = 0; i < representations.size(); ++i)
            report.results[i] = eval_representation(representations[i].id, cfg, params);
    }

    report.pass = true;
    report.max_abs_deviation = 0.0;
    for (const auto& r : report.results) {
        const Check c = check_result(r, barnes_n);
        report.checks.push_back(c);
        if (c.counted && !c.passed) report.pass = false;
        if (r.status == ResultStatus::converged)
            report.max_abs_deviation = std::max(report.max_abs_deviation, r.deviation());
    }
    report.generated_at = std::chrono::system_clock::now();
    return report;
}

} // namespace glk::glaisher
