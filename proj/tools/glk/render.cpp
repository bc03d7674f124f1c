#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace glk::cli {

namespace gl = glaisher;

namespace {

std::string status_name(const gl::RepresentationResult& r) { return std::string(gl::to_string(r.status)); }

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string csv_number(double x) {
    if (!std::isfinite(x)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
    return buf;
}

} // namespace

double round_significant(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*e", significant_digits - 1, x);
    return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round_significant(x);
}

std::string fixed(double x) {
    if (!std::isfinite(x)) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", text_decimals, round_significant(x));
    return buf;
}

nlohmann::ordered_json result_json(const gl::RepresentationResult& r) {
    return {
        {"id", std::string(gl::to_string(r.id))},
        {"log_a_estimate", json_number(r.log_a_estimate)},
        {"error_bound", json_number(r.error_bound)},
        {"evals", r.evals},
        {"status", status_name(r)},
        {"deviation", json_number(r.deviation())},
    };
}

nlohmann::ordered_json report_json(const gl::ComparisonReport& report) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : report.results) results.push_back(result_json(r));
    return {
        {"reference_log_a", json_number(report.reference_log_a)},
        {"results", std::move(results)},
        {"max_abs_deviation", json_number(report.max_abs_deviation)},
        {"verdict", std::string(report.verdict())},
    };
}

std::string result_text(const gl::RepresentationResult& r) {
    std::ostringstream os;
    os << "representation  " << gl::to_string(r.id) << '\n'
       << "description     " << gl::info(r.id).description << '\n'
       << "log_a_estimate  " << fixed(r.log_a_estimate) << '\n'
       << "reference       " << fixed(gl::reference_log_a()) << '\n'
       << "deviation       " << fixed(r.deviation()) << '\n'
       << "error_bound     " << fixed(r.error_bound) << '\n'
       << "evals           " << r.evals << '\n'
       << "status          " << status_name(r) << '\n';
    return os.str();
}

std::string report_text(const gl::ComparisonReport& report) {
    constexpr std::size_t id_w = 24, num_w = 20, evals_w = 8, status_w = 18;
    std::ostringstream os;
    os << "reference log A  " << fixed(report.reference_log_a) << "\n\n";
    os << pad("id", id_w) << pad("log_a_estimate", num_w) << pad("deviation", num_w) << pad("error_bound", num_w)
       << pad("evals", evals_w) << pad("status", status_w) << "check\n";
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const auto& r = report.results[i];
        const auto& c = report.checks[i];
        const std::string check = !c.counted ? "not counted" : c.passed ? "ok" : "FAIL";
        os << pad(std::string(gl::to_string(r.id)), id_w) << pad(fixed(r.log_a_estimate), num_w)
           << pad(fixed(r.deviation()), num_w) << pad(fixed(r.error_bound), num_w)
           << pad(std::to_string(r.evals), evals_w) << pad(status_name(r), status_w) << check << '\n';
    }
    os << "\nmax |deviation| over converged integrals  " << fixed(report.max_abs_deviation) << '\n';
    os << "verdict  " << report.verdict() << '\n';
    return os.str();
}

std::string csv_header() { return "id,log_a_estimate,error_bound,evals,status,deviation\n"; }

std::string result_csv(const gl::RepresentationResult& r) {
    return std::string(gl::to_string(r.id)) + ',' + csv_number(r.log_a_estimate) + ',' + csv_number(r.error_bound) +
           ',' + std::to_string(r.evals) + ',' + status_name(r) + ',' + csv_number(r.deviation()) + '\n';
}

std::string report_csv(const gl::ComparisonReport& report) {
    std::string out = csv_header();
    for (const auto& r : report.results) out += result_csv(r);
    return out;
}

} // namespace glk::cli
