#include "glk/binet.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "glk/specialfn.hpp"

namespace glk::binet {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;
constexpr double half_log_2pi = 0.91893853320467274178;

// Below this argument the bracketed Bernoulli-type expressions are summed
// from their Taylor series (tools/derive/series_coefficients.py).
constexpr double series_cutoff = 0.5;

// binet_first_bracket: coefficients of t^0 .. t^17
constexpr std::array<double, 18> binet_first_bracket_series = {
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
    0.00000000000000000e+00,
};

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

template <std::size_t N>
double horner(const std::array<double, N>& c, double t) {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
}

// (1/(e^t - 1) - 1/t + 1/2) / t, -> 1/12 at 0
double binet_bracket(double t) {
    if (t < series_cutoff) return horner(binet_first_bracket_series, t);
    return (1.0 / std::expm1(t) - 1.0 / t + 0.5) / t;
}

// 1/t - 1/(e^t - 1), -> 1/2 at 0
double poisson_bracket(double t) {
    if (t < series_cutoff) return -horner(poisson_exp_bracket_series, t);
    return 1.0 / t - 1.0 / std::expm1(t);
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(what) + ": argument must be positive and finite, got " +
                                std::to_string(x));
}

quad::Estimate scaled(quad::Estimate e, double factor, double offset = 0.0) {
    e.value = offset + factor * e.value;
    e.error_bound *= std::abs(factor);
    return e;
}

} // namespace

std::string_view to_string(MuMethod m) noexcept {
    switch (m) {
    case MuMethod::definition: return "definition";
    case MuMethod::schaar: return "schaar";
    case MuMethod::schaar_scaled: return "schaar_scaled";
    case MuMethod::losch_schoblik: return "losch_schoblik";
    case MuMethod::binet_first: return "binet_first";
    }
    return "unknown";
}

std::string_view to_string(NuVariant v) noexcept {
    switch (v) {
    case NuVariant::poisson_exp: return "poisson_exp";
    case NuVariant::poisson_rational: return "poisson_rational";
    }
    return "unknown";
}

std::optional<MuMethod> parse_mu_method(std::string_view name) noexcept {
    for (MuMethod m : all_mu_methods)
        if (to_string(m) == name) return m;
    return std::nullopt;
}

std::optional<NuVariant> parse_nu_variant(std::string_view name) noexcept {
    for (NuVariant v : {NuVariant::poisson_exp, NuVariant::poisson_rational})
        if (to_string(v) == name) return v;
    return std::nullopt;
}

quad::Estimate mu(double x, MuMethod method, const quad::Config& cfg) {
    require_positive(x, "mu");
    const double clip = cfg.lower_clip;

    switch (method) {
    case MuMethod::definition: {
        const double value = special::log_gamma(x + 1.0) - (x + 0.5) * std::log(x) + x - half_log_2pi;
        return quad::Estimate{value, definition_error_bound, 0, quad::Status::converged};
    }
    case MuMethod::schaar: {
        const double k = two_pi * x;
        quad::Integrand f{[k, clip](double t) {
                              if (t < clip) return 1.0 / k;
                              return std::atan(t) / std::expm1(k * t);
                          },
                          "schaar"};
        return scaled(quad::integrate_semi_infinite(f, cfg), 2.0 * x);
    }
    case MuMethod::schaar_scaled: {
        const double k = two_pi * x;
        quad::Integrand f{[k, clip](double u) {
                              if (u < clip) return 1.0 / k;
                              return std::atan(u / k) / std::expm1(u);
                          },
                          "schaar_scaled"};
        return scaled(quad::integrate_semi_infinite(f, cfg), 1.0 / pi);
    }
    case MuMethod::losch_schoblik: {
        const double x2 = x * x;
        quad::Integrand f{[x2](double t) { return std::log(-std::expm1(-two_pi * t)) / (t * t + x2); },
                          "losch_schoblik"};
        return scaled(quad::integrate_semi_infinite(f, cfg), -x / pi);
    }
    case MuMethod::binet_first: {
        quad::Integrand f{[x](double t) { return std::exp(-x * t) * binet_bracket(t); }, "binet_first"};
        return quad::integrate_semi_infinite(f, cfg);
    }
    }
    throw std::invalid_argument("mu: unknown method");
}

quad::Estimate nu(double x, NuVariant variant, const quad::Config& cfg) {
    require_positive(x, "nu");
    const double clip = cfg.lower_clip;

    switch (variant) {
    case NuVariant::poisson_exp: {
        quad::Integrand f{[x](double t) { return std::exp(-x * t) * poisson_bracket(t); }, "poisson_exp"};
        return quad::integrate_semi_infinite(f, cfg);
    }
    case NuVariant::poisson_rational: {
        const double k = two_pi * x;
        // 1 - e^(kt) < 0, so the integrand is negative throughout
        quad::Integrand f{[k, clip](double t) {
                              if (t < clip) return -1.0 / k;
                              return -t / ((1.0 + t * t) * std::expm1(k * t));
                          },
                          "poisson_rational"};
        return scaled(quad::integrate_semi_infinite(f, cfg), 2.0, 0.5 / x);
    }
    }
    throw std::invalid_argument("nu: unknown variant");
}

double inner_arctan_integral(double u) {
    require_positive(u, "inner_arctan_integral");
    // pi/4 - arctan(pi/u)/2 == arctan(u/pi)/2 for u > 0
    const double head = 0.5 * std::atan(u / pi);
    double log_term;
    if (u < pi) {
        log_term = 2.0 * std::log(pi / u) + std::log1p((u * u) / (pi * pi));
    } else {
        log_term = std::log1p((pi * pi) / (u * u));
    }
    return head + u / (4.0 * pi) * log_term;
}

double mu_derivative_identity_residual(double x, double h, const quad::Config& cfg) {
    if (!(h >= 1e-6 && h <= 1e-3)) throw std::invalid_argument("mu_derivative_identity_residual: h must lie in [1e-6, 1e-3]");
    if (!(x > h)) throw std::domain_error("mu_derivative_identity_residual: need x > h");
    const double up = mu(x + h, MuMethod::definition, cfg).value;
    const double down = mu(x - h, MuMethod::definition, cfg).value;
    const double derivative = (up - down) / (2.0 * h);
    const quad::Estimate n = nu(x, NuVariant::poisson_exp, cfg);
    return std::abs(derivative + 0.5 / x - n.value);
}

} // namespace glk::binet
