#ifndef GLK_SPECIALFN_HPP
#define GLK_SPECIALFN_HPP

#include <string_view>

#include "glk/quadrature.hpp"

namespace glk::special {

struct PinnedConstant {
    double value;
    std::string_view provenance;
};

/// Reference values used across the library. Immutable.
struct ConstantsTable {
    PinnedConstant log_A;
    PinnedConstant gamma_euler;
    PinnedConstant catalan;
    PinnedConstant lemniscate;
    PinnedConstant log_2pi;
    /// The Glaisher-Kinkelin constant itself; exp(log_A) agrees to 1e-14.
    PinnedConstant A;
};

const ConstantsTable& constants() noexcept;

/// log Gamma(x) for x > 0. Stirling series after shifting the argument
/// to x >= 10. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// psi(x) = d/dx log Gamma(x) for x > 0, by the same shift-and-expand scheme.
double digamma(double x);

/// Catalan's constant as the alternating sum of 1/(2n+1)^2, accelerated
/// with the Cohen-Rodriguez Villegas-Zagier transformation.
double dirichlet_beta_2();

/// Plain truncation of the same alternating series after `terms` terms.
double dirichlet_beta_2_partial(int terms);

/// Gamma(1/4)^2 / (2 sqrt(2 pi)).
double lemniscate_constant();

/// Largest index for which stieltjes_gamma keeps about ten digits in double.
inline constexpr int stieltjes_precise_max_n = 12;

struct StieltjesValue {
    double value = 0.0;
    quad::Estimate integral;
    /// n exceeds stieltjes_precise_max_n; the value is computed anyway.
    bool precision_warning = false;
};

/// Generalized Stieltjes constant gamma_n(z) from Coffey's integral:
///   (1/2z) log^n z - log^(n+1) z / (n+1)
///     - 2 Re int_0^inf i (z + iv) log^n(z - iv) / ((z^2 + v^2)(e^(2 pi v) - 1)) dv
/// Throws std::domain_error for n < 0 or z <= 0.
StieltjesValue stieltjes_gamma(int n, double z, const quad::Config& cfg = {});

struct LerchSum {
    double value = 0.0;
    int terms = 0;
    double last_term = 0.0;
    /// False when the cap was reached with the last term above 1e-6.
    bool converged = true;
    bool precision_warning = false;
};

/// S(z) = 1 + sum_{n>=0} gamma_{n+1}(z) / n!, which equals
/// log(2 pi)/2 - log Gamma(z). Terms are added until one drops below 1e-10
/// or `term_cap` terms have been used (4 <= term_cap <= 20).
LerchSum lerch_sum_check(double z, int term_cap, const quad::Config& cfg = {});

/// The same series summed in closed form:
///   log(z)/2 - z (log z - 1) - 1 - 2 int_0^inf arctan(x/z) / (e^(2 pi x) - 1) dx
/// which should equal S(z) - 1.
quad::Estimate stieltjes_series_closed_form(double z, const quad::Config& cfg = {});

} // namespace glk::special

#endif // GLK_SPECIALFN_HPP
