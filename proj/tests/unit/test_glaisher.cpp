#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "glk/binet.hpp"
#include "glk/glaisher.hpp"
#include "glk/quadrature.hpp"
#include "reference_values.hpp"

namespace gl = glk::glaisher;
namespace ref = glk::testref;
using gl::RepresentationId;
using gl::ResultStatus;

namespace {

constexpr double pi = std::numbers::pi;

constexpr RepresentationId integral_ids[] = {
    RepresentationId::eq8_loggamma_integral, RepresentationId::eq9_xlogx,
    RepresentationId::eq10_coth,             RepresentationId::eq11_exp_bracket,
    RepresentationId::eq12_log_bracket,      RepresentationId::eq28_schaar_new,
    RepresentationId::eq33_losch_new,
};

// zeta(k), k >= 2: partial sum plus Euler-Maclaurin tail.
double zeta_oracle(int k) {
    constexpr int n = 1000;
    double sum = 0.0;
    for (int j = n - 1; j >= 1; --j) sum += std::pow(j, -k);
    const double x = n;
    return sum + std::pow(x, 1 - k) / (k - 1) + 0.5 * std::pow(x, -k) + k * std::pow(x, -k - 1) / 12.0 -
           k * (k + 1.0) * (k + 2.0) * std::pow(x, -k - 3) / 720.0;
}

// G(z) = G(1+z) / Gamma(z), with the Maclaurin series of log G(1+z).
double barnes_g_oracle(double z) {
    double log_g1 = 0.5 * z * std::log(2 * pi) - 0.5 * (z + (1.0 + ref::euler_gamma) * z * z);
    for (int k = 2; k < 80; ++k)
        log_g1 += (k % 2 == 0 ? 1.0 : -1.0) * zeta_oracle(k) * std::pow(z, k + 1) / (k + 1);
    return std::exp(log_g1) / std::tgamma(z);
}

double raw_integral_reference(RepresentationId id) {
    switch (id) {
    case RepresentationId::eq8_loggamma_integral: return ref::loggamma_half_integral;
    case RepresentationId::eq9_xlogx: return ref::eq9_integral;
    case RepresentationId::eq10_coth: return ref::eq10_integral;
    case RepresentationId::eq11_exp_bracket: return ref::eq11_integral;
    case RepresentationId::eq12_log_bracket: return ref::eq12_integral;
    case RepresentationId::eq28_schaar_new: return ref::eq28_integral;
    case RepresentationId::eq33_losch_new: return ref::eq33_integral;
    default: return NAN;
    }
}

} // namespace

TEST_SUITE("glaisher.registry") {
    TEST_CASE("ten ordered, uniquely tagged entries") {
        const auto reg = gl::registry();
        REQUIRE(reg.size() == 10);
        std::set<std::string_view> tags, shorts;
        for (std::size_t i = 0; i < reg.size(); ++i) {
            CHECK(static_cast<std::size_t>(reg[i].id) == i);
            CHECK(reg[i].tag.starts_with(reg[i].short_tag));
            CHECK_FALSE(reg[i].description.empty());
            tags.insert(reg[i].tag);
            shorts.insert(reg[i].short_tag);
            CHECK(&gl::info(reg[i].id) == &reg[i]);
        }
        CHECK(tags.size() == 10);
        CHECK(shorts.size() == 10);
    }

    TEST_CASE("parsing accepts full and short tags") {
        for (const auto& r : gl::registry()) {
            CHECK(gl::parse_representation(r.tag) == r.id);
            CHECK(gl::parse_representation(r.short_tag) == r.id);
            CHECK(gl::to_string(r.id) == r.tag);
        }
        CHECK(gl::parse_representation("eq28") == RepresentationId::eq28_schaar_new);
        CHECK_FALSE(gl::parse_representation("nosuch").has_value());
        CHECK_FALSE(gl::parse_representation("eq3").has_value());
        CHECK_FALSE(gl::parse_representation("").has_value());
    }

    TEST_CASE("status mapping") {
        using glk::quad::Status;
        CHECK(gl::from_quadrature(Status::converged) == ResultStatus::converged);
        CHECK(gl::from_quadrature(Status::budget_exhausted) == ResultStatus::budget_exhausted);
        CHECK(gl::from_quadrature(Status::diverged) == ResultStatus::diverged);
        CHECK(gl::to_string(ResultStatus::not_applicable) == "not_applicable");
    }

    TEST_CASE("reference value") {
        CHECK(gl::reference_log_a() == doctest::Approx(ref::log_a).epsilon(1e-15));
    }
}

TEST_SUITE("glaisher.integrals") {
    TEST_CASE("raw integrals against frozen references") {
        for (auto id : integral_ids) {
            CAPTURE(gl::to_string(id));
            const auto e = gl::representation_integral(id);
            CHECK(e.converged());
            CHECK(std::abs(e.value - raw_integral_reference(id)) <= 1e-11);
        }
    }

    TEST_CASE("each integral representation recovers log A") {
        for (auto id : integral_ids) {
            CAPTURE(gl::to_string(id));
            const auto r = gl::eval_representation(id);
            CHECK(r.id == id);
            CHECK(r.status == ResultStatus::converged);
            CHECK(r.deviation() <= 1e-9);
            CHECK(r.deviation() <= 10.0 * r.error_bound);
            CHECK(r.evals > 0);
            CHECK(r.evals <= glk::quad::Config{}.max_evals);
        }
    }

    TEST_CASE("the tanh form diverges") {
        const auto r = gl::eval_representation(RepresentationId::eq13_tanh);
        CHECK(r.status == ResultStatus::diverged);
        CHECK(gl::check_result(r, 50).passed);
        CHECK(gl::representation_integral(RepresentationId::eq13_tanh).status == glk::quad::Status::diverged);
    }

    TEST_CASE("series representations have no raw integral") {
        CHECK_THROWS_AS(gl::representation_integral(RepresentationId::eq1_prime_product), std::invalid_argument);
        CHECK_THROWS_AS(gl::representation_integral(RepresentationId::eq2_barnes_limit), std::invalid_argument);
    }

    TEST_CASE("a starved budget is reported, not thrown") {
        glk::quad::Config cfg;
        cfg.max_evals = 100;
        const auto r = gl::eval_representation(RepresentationId::eq33_losch_new, cfg);
        CHECK(r.status == ResultStatus::budget_exhausted);
        CHECK_FALSE(gl::check_result(r, 50).passed);
    }

    TEST_CASE("loose tolerance still lands near log A") {
        glk::quad::Config cfg;
        cfg.abs_tol = cfg.rel_tol = 1e-6;
        for (auto id : integral_ids) {
            CAPTURE(gl::to_string(id));
            const auto r = gl::eval_representation(id, cfg);
            CHECK(r.deviation() <= 10.0 * r.error_bound);
            CHECK(r.deviation() < 1e-4);
        }
    }
}

TEST_SUITE("glaisher.identities") {
    TEST_CASE("log-gamma half integral and its Stirling part") {
        CHECK(std::abs(gl::loggamma_half_integral(ref::log_a) - ref::loggamma_half_integral) <= 1e-15);
        CHECK(std::abs(gl::stirling_part_integral() - ref::stirling_part_integral) <= 1e-15);
        const auto q = glk::quad::integrate_finite(
            {[](double x) { return (x + 0.5) * std::log(x) - x + ref::half_log_2pi; }, "stirling"}, 0.0, 0.5);
        REQUIRE(q.converged());
        CHECK(std::abs(q.value - gl::stirling_part_integral()) < 1e-10);
    }

    TEST_CASE("log-gamma half integral on both sides") {
        const auto lhs = gl::representation_integral(RepresentationId::eq8_loggamma_integral);
        REQUIRE(lhs.converged());
        CHECK(std::abs(lhs.value - gl::loggamma_half_integral(gl::reference_log_a())) < 1e-10);
    }

    TEST_CASE("swapping the order of integration") {
        // int_0^(1/2) mu(x) dx by nested quadrature against the u-outer form.
        const auto nested = glk::quad::integrate_finite(
            {[](double x) { return glk::binet::mu(x, glk::binet::MuMethod::schaar_scaled).value; }, "mu"}, 0.0, 0.5);
        const auto swapped = gl::representation_integral(RepresentationId::eq28_schaar_new);
        REQUIRE(nested.converged());
        REQUIRE(swapped.converged());
        CHECK(std::abs(nested.value - swapped.value / pi) < 1e-8);
        CHECK(std::abs(nested.value - (ref::loggamma_half_integral - ref::stirling_part_integral)) < 1e-8);
    }

    TEST_CASE("rational inner integral") {
        for (double t : {0.1, 1.0, 10.0, 0.01}) {
            CAPTURE(t);
            const auto q = glk::quad::integrate_finite(
                {[t](double x) { return 2 * x / (t * t + x * x); }, "rational"}, 0.0, 0.5);
            REQUIRE(q.converged());
            CHECK(std::abs(gl::rational_inner_integral(t) - q.value) < 1e-12);
        }
        CHECK_THROWS_AS(gl::rational_inner_integral(0.0), std::domain_error);
    }

    TEST_CASE("Barnes G at 1/2 and 1/4") {
        const double half = barnes_g_oracle(0.5);
        const double quarter = barnes_g_oracle(0.25);
        CHECK(std::abs(half - ref::barnes_g_half) <= 1e-14);
        CHECK(std::abs(quarter - ref::barnes_g_quarter) <= 1e-14);
        CHECK(std::abs(gl::barnes_g_special(gl::BarnesArgument::half) - half) <= 1e-13);
        CHECK(std::abs(gl::barnes_g_special(gl::BarnesArgument::quarter) - quarter) <= 1e-13);
    }
}

TEST_SUITE("glaisher.primes") {
    TEST_CASE("sieve") {
        CHECK(gl::primes_up_to(1).empty());
        CHECK(gl::primes_up_to(2) == std::vector<std::int64_t>{2});
        CHECK(gl::primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
        CHECK(gl::primes_up_to(100).size() == 25);
        CHECK(gl::primes_up_to(100000).size() == 9592);
    }

    TEST_CASE("truncated sum and its tail bound") {
        const double s5 = gl::prime_log_sum(100000);
        const double s6 = gl::prime_log_sum(1000000);
        CHECK(s5 < s6);
        CHECK(s6 < ref::prime_sum_target);
        CHECK(ref::prime_sum_target - s5 <= gl::prime_tail_bound(100000));
        CHECK(ref::prime_sum_target - s6 <= gl::prime_tail_bound(1000000));
        CHECK(gl::prime_tail_bound(1000000) < gl::prime_tail_bound(100000));
    }

    TEST_CASE("first factor") {
        CHECK(gl::prime_log_sum(2) == std::log(2.0) / 3.0);
        CHECK(gl::prime_log_sum(1) == 0.0);
    }

    TEST_CASE("prime product recovers log A within its bound") {
        const auto r = gl::prime_product_log_a(100000);
        CHECK(r.status == ResultStatus::not_applicable);
        CHECK(r.error_bound < 3e-5);
        CHECK(r.deviation() <= r.error_bound);
        CHECK(gl::check_result(r, 50).passed);
        CHECK_THROWS_AS(gl::prime_product_log_a(99), std::invalid_argument);
    }
}

TEST_SUITE("glaisher.barnes") {
    TEST_CASE("log G(n+1) is a sum of log factorials") {
        for (int n : {2, 3, 10, 50, 400}) {
            double direct = 0.0;
            for (int k = 1; k < n; ++k) direct += std::lgamma(k + 1.0);
            CAPTURE(n);
            CHECK(std::abs(gl::log_barnes_g_successor(n) - direct) <= 1e-13 * std::max(1.0, std::abs(direct)));
        }
        CHECK(gl::log_barnes_g_successor(1) == 0.0);
    }

    TEST_CASE("limit sequence deviations match the reference") {
        const std::pair<int, double> points[] = {
            {2, ref::barnes_seq_2_deviation},   {5, ref::barnes_seq_5_deviation},
            {10, ref::barnes_seq_10_deviation}, {20, ref::barnes_seq_20_deviation},
            {40, ref::barnes_seq_40_deviation}, {50, ref::barnes_seq_50_deviation},
        };
        for (auto [n, expected] : points) {
            CAPTURE(n);
            const auto r = gl::barnes_limit_log_a(n);
            const double dev = r.log_a_estimate - ref::log_a;
            CHECK(std::abs(dev - expected) <= 1e-12 * n * n);
            CHECK(r.deviation() <= r.error_bound);
        }
    }

    TEST_CASE("small indices") {
        CHECK(gl::log_barnes_g_successor(2) == 0.0);
        CHECK(gl::barnes_limit_log_a(20).deviation() < 1e-4);
        for (auto which : {gl::BarnesArgument::half, gl::BarnesArgument::quarter}) {
            CHECK(gl::barnes_g_special(which) > 0.0);
            CHECK(gl::barnes_g_special(which) < 1.0);
        }
    }

    TEST_CASE("deviation shrinks monotonically") {
        double previous = INFINITY;
        for (int n = 2; n <= 200; n += 3) {
            const double d = gl::barnes_limit_log_a(n).deviation();
            CAPTURE(n);
            CHECK(d < previous);
            previous = d;
        }
        CHECK(gl::barnes_limit_log_a(40).deviation() < gl::barnes_limit_log_a(10).deviation());
        CHECK(gl::barnes_limit_log_a(50).deviation() < 1e-4);
    }

    TEST_CASE("range checks") {
        CHECK_THROWS_AS(gl::barnes_limit_log_a(1), std::invalid_argument);
        CHECK_THROWS_AS(gl::barnes_limit_log_a(2001), std::overflow_error);
        CHECK_NOTHROW(gl::barnes_limit_log_a(2000));
        CHECK(gl::barnes_limit_log_a(2000).deviation() < 1e-8);
    }
}

TEST_SUITE("glaisher.verify") {
    TEST_CASE("full comparison passes") {
        const auto start = std::chrono::steady_clock::now();
        const auto report = gl::verify_all();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        CHECK(took.count() < 60.0);
        CHECK(report.pass);
        CHECK(report.verdict() == "pass");
        CHECK(report.reference_log_a == gl::reference_log_a());
        REQUIRE(report.results.size() == 10);
        REQUIRE(report.checks.size() == 10);
        double max_dev = 0.0;
        for (std::size_t i = 0; i < report.results.size(); ++i) {
            const auto& r = report.results[i];
            CHECK(static_cast<std::size_t>(r.id) == i);
            CHECK(report.checks[i].passed);
            if (r.status == ResultStatus::converged) max_dev = std::max(max_dev, r.deviation());
        }
        CHECK(report.max_abs_deviation == max_dev);
        CHECK(report.max_abs_deviation <= 1e-9);
    }

    TEST_CASE("parallel and serial runs are bit-identical") {
        const auto a = gl::verify_all({}, 100000, 50, true);
        const auto b = gl::verify_all({}, 100000, 50, false);
        for (std::size_t i = 0; i < a.results.size(); ++i) {
            CAPTURE(i);
            CHECK(std::memcmp(&a.results[i].log_a_estimate, &b.results[i].log_a_estimate, sizeof(double)) == 0);
            CHECK(a.results[i].evals == b.results[i].evals);
            CHECK(a.results[i].status == b.results[i].status);
        }
    }

    TEST_CASE("small Barnes index is reported but not counted") {
        const auto coarse = gl::verify_all({}, 100000, 5);
        const auto fine = gl::verify_all({}, 100000, 50);
        const auto eq2 = static_cast<std::size_t>(RepresentationId::eq2_barnes_limit);
        CHECK(coarse.results[eq2].deviation() > fine.results[eq2].deviation());
        CHECK_FALSE(coarse.checks[eq2].counted);
        CHECK(coarse.pass);
    }

    TEST_CASE("loose tolerance keeps deviations within ten tolerances") {
        glk::quad::Config cfg;
        cfg.abs_tol = 1e-4;
        const auto report = gl::verify_all(cfg);
        for (auto id : integral_ids) {
            const auto& r = report.results[static_cast<std::size_t>(id)];
            CAPTURE(gl::to_string(id));
            CHECK(r.deviation() <= 10.0 * 1e-4);
        }
        CHECK(report.results[static_cast<std::size_t>(RepresentationId::eq13_tanh)].status == ResultStatus::diverged);
    }

    TEST_CASE("results carry timing and the report a timestamp") {
        const auto before = std::chrono::system_clock::now();
        const auto report = gl::verify_all();
        CHECK(report.generated_at >= before);
        for (const auto& r : report.results) CHECK(r.elapsed.count() >= 0.0);
    }

    TEST_CASE("a failing representation fails the verdict") {
        glk::quad::Config cfg;
        cfg.max_evals = 100;
        const auto report = gl::verify_all(cfg);
        CHECK_FALSE(report.pass);
        CHECK(report.verdict() == "fail");
    }
}
