#ifndef GLK_BINET_HPP
#define GLK_BINET_HPP

// The Binet function
//   mu(x) = log Gamma(x+1) - (x + 1/2) log x + x - log sqrt(2 pi)
// and its companion nu(x) = mu'(x) + 1/(2x), each through several
// independent representations.

#include <optional>
#include <string_view>

#include "glk/quadrature.hpp"

namespace glk::binet {

enum class MuMethod {
    definition,     // closed form through log_gamma, no quadrature
    schaar,         // 2x int_0^inf arctan(t) / (e^(2 pi x t) - 1) dt
    schaar_scaled,  // (1/pi) int_0^inf arctan(u / (2 pi x)) / (e^u - 1) du
    losch_schoblik, // -(x/pi) int_0^inf log(1 - e^(-2 pi t)) / (t^2 + x^2) dt
    binet_first,    // int_0^inf e^(-xt) (1/(e^t - 1) - 1/t + 1/2) dt / t
};

inline constexpr MuMethod all_mu_methods[] = {
    MuMethod::definition, MuMethod::schaar, MuMethod::schaar_scaled,
    MuMethod::losch_schoblik, MuMethod::binet_first,
};

enum class NuVariant {
    // int_0^inf e^(-xt) (1/t - 1/(e^t - 1)) dt. The bracket is negative the
    // other way round, which would give -nu.
    poisson_exp,
    poisson_rational, // 1/(2x) + 2 int_0^inf t / ((1 + t^2)(1 - e^(2 pi x t))) dt
};

std::string_view to_string(MuMethod m) noexcept;
std::string_view to_string(NuVariant v) noexcept;
std::optional<MuMethod> parse_mu_method(std::string_view name) noexcept;
std::optional<NuVariant> parse_nu_variant(std::string_view name) noexcept;

/// Error bound attached to the definition method (log_gamma accuracy).
inline constexpr double definition_error_bound = 1e-13;

/// Throws std::domain_error for x <= 0.
quad::Estimate mu(double x, MuMethod method, const quad::Config& cfg = {});

/// Throws std::domain_error for x <= 0.
quad::Estimate nu(double x, NuVariant variant, const quad::Config& cfg = {});

/// int_0^(1/2) arctan(u / (2 pi x)) dx in closed form:
///   pi/4 - arctan(pi/u)/2 + (u / (4 pi)) log(1 + pi^2/u^2)
/// Throws std::domain_error for u <= 0.
double inner_arctan_integral(double u);

/// |(mu(x+h) - mu(x-h)) / 2h + 1/(2x) - nu(x)| with mu by definition and nu
/// by poisson_exp. Requires x > h and 1e-6 <= h <= 1e-3.
double mu_derivative_identity_residual(double x, double h, const quad::Config& cfg = {});

} // namespace glk::binet

#endif // GLK_BINET_HPP
