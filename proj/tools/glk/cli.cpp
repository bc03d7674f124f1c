#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "glk/binet.hpp"
#include "glk/glaisher.hpp"
#include "glk/specialfn.hpp"
#include "render.hpp"

namespace glk::cli {

namespace gl = glaisher;

namespace {

constexpr double min_tol = 1e-14;
constexpr double max_tol = 1e-2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::string rep;
    double tol = 1e-12;
    std::int64_t prime_limit = 100000;
    int barnes_n = 50;
    double x = 1.0;
    std::string method;
    int n = 1;
    double z = 1.0;
};

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    return OutputFormat::text;
}

quad::Config make_config(double tol, const std::optional<std::string>& max_evals_env) {
    quad::Config cfg;
    cfg.abs_tol = tol;
    cfg.rel_tol = tol;
    if (max_evals_env) {
        const std::string& s = *max_evals_env;
        std::size_t budget = 0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), budget);
        if (ec != std::errc{} || end != s.data() + s.size() || budget < 100)
            throw UsageError("GLK_MAX_EVALS must be an integer >= 100, got '" + s + "'");
        cfg.max_evals = budget;
    }
    return cfg;
}

void check_series_params(const Options& o) {
    if (o.prime_limit < 100) throw UsageError("--prime-limit must be at least 100");
    if (o.prime_limit > 200000000) throw UsageError("--prime-limit must not exceed 2e8");
    if (o.barnes_n < 2 || o.barnes_n > 2000) throw UsageError("--barnes-n must lie in [2, 2000]");
}

std::string format_value(double v, int digits = 16) {
    if (!std::isfinite(v)) return "n/a";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

int cmd_list(std::ostream& out) {
    for (const auto& r : gl::registry())
        out << r.short_tag << std::string(6 - std::min<std::size_t>(r.short_tag.size(), 5), ' ') << r.tag
            << std::string(24 - std::min<std::size_t>(r.tag.size(), 23), ' ') << r.description << '\n';
    return exit_ok;
}

int cmd_eval(const Options& o, const quad::Config& cfg, std::ostream& out, std::ostream& err) {
    const auto id = gl::parse_representation(o.rep);
    if (!id) throw UsageError("unknown representation '" + o.rep + "' (see 'glk list')");
    check_series_params(o);

    const auto r = gl::eval_representation(*id, cfg, {o.prime_limit, o.barnes_n});
    const bool expected_divergence = *id == gl::RepresentationId::eq13_tanh;
    std::string note;
    if (expected_divergence && r.status == gl::ResultStatus::diverged)
        note = "the tanh integrand is not integrable at infinity; divergence is the expected outcome";
    else if (expected_divergence)
        note = "the tanh integrand was expected to diverge but did not";

    switch (parse_format(o.format)) {
    case OutputFormat::json: {
        auto j = result_json(r);
        if (!note.empty()) j["note"] = note;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv: out << csv_header() << result_csv(r); break;
    case OutputFormat::text:
        out << result_text(r);
        if (!note.empty()) out << "note            " << note << '\n';
        break;
    }

    if (expected_divergence) return r.status == gl::ResultStatus::diverged ? exit_ok : exit_numerical;
    if (r.status == gl::ResultStatus::diverged || r.status == gl::ResultStatus::budget_exhausted) {
        err << "glk: " << gl::to_string(r.id) << " did not converge (" << gl::to_string(r.status) << ")\n";
        return exit_numerical;
    }
    return exit_ok;
}

int cmd_verify(const Options& o, const quad::Config& cfg, std::ostream& out) {
    check_series_params(o);
    const auto report = gl::verify_all(cfg, o.prime_limit, o.barnes_n);
    switch (parse_format(o.format)) {
    case OutputFormat::json: out << report_json(report).dump(2) << '\n'; break;
    case OutputFormat::csv: out << report_csv(report); break;
    case OutputFormat::text: out << report_text(report); break;
    }
    return report.pass ? exit_ok : exit_verify_failed;
}

struct SpecialValue {
    std::string name;
    double value;
    double error_bound;
    std::size_t evals;
    std::string status;
    std::string note;
};

int emit_special(const SpecialValue& v, const Options& o, std::ostream& out) {
    switch (parse_format(o.format)) {
    case OutputFormat::json: {
        nlohmann::ordered_json j = {{"name", v.name},         {"value", json_number(v.value)},
                            {"error_bound", json_number(v.error_bound)}, {"evals", v.evals},
                            {"status", v.status}};
        if (!v.note.empty()) j["note"] = v.note;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "name,value,error_bound,evals,status\n"
            << v.name << ',' << format_value(v.value, significant_digits) << ','
            << format_value(v.error_bound, significant_digits) << ',' << v.evals << ',' << v.status << '\n';
        break;
    case OutputFormat::text:
        out << v.name << " = " << format_value(v.value, significant_digits) << "  (error bound "
            << format_value(v.error_bound, 3) << ", " << v.evals << " evals, " << v.status << ")\n";
        if (!v.note.empty()) out << "note: " << v.note << '\n';
        break;
    }
    return v.status == "converged" ? exit_ok : exit_numerical;
}

int cmd_mu(const Options& o, const quad::Config& cfg, std::ostream& out) {
    const std::string method = o.method.empty() ? "definition" : o.method;
    const auto m = binet::parse_mu_method(method);
    if (!m) throw UsageError("unknown mu method '" + method + "'");
    if (!(o.x > 0.0)) throw UsageError("--x must be positive");
    const auto e = binet::mu(o.x, *m, cfg);
    return emit_special({"mu(" + format_value(o.x) + ", " + method + ")", e.value, e.error_bound, e.evals,
                         std::string(quad::to_string(e.status)), ""},
                        o, out);
}

int cmd_nu(const Options& o, const quad::Config& cfg, std::ostream& out) {
    const std::string method = o.method.empty() ? "poisson_exp" : o.method;
    const auto v = binet::parse_nu_variant(method);
    if (!v) throw UsageError("unknown nu variant '" + method + "'");
    if (!(o.x > 0.0)) throw UsageError("--x must be positive");
    const auto e = binet::nu(o.x, *v, cfg);
    return emit_special({"nu(" + format_value(o.x) + ", " + method + ")", e.value, e.error_bound, e.evals,
                         std::string(quad::to_string(e.status)), ""},
                        o, out);
}

int cmd_stieltjes(const Options& o, const quad::Config& cfg, std::ostream& out) {
    if (o.n < 0) throw UsageError("--n must be non-negative");
    if (!(o.z > 0.0)) throw UsageError("--z must be positive");
    const auto g = special::stieltjes_gamma(o.n, o.z, cfg);
    std::string note;
    if (g.precision_warning)
        note = "n > " + std::to_string(special::stieltjes_precise_max_n) + ": expect fewer than ten correct digits";
    return emit_special({"gamma_" + std::to_string(o.n) + "(" + format_value(o.z) + ")", g.value,
                         2.0 * g.integral.error_bound, g.integral.evals,
                         std::string(quad::to_string(g.integral.status)), note},
                        o, out);
}

int cmd_constants(const Options& o, std::ostream& out) {
    const auto& t = special::constants();
    const std::pair<const char*, const special::PinnedConstant*> rows[] = {
        {"log_A", &t.log_A}, {"gamma", &t.gamma_euler}, {"catalan", &t.catalan},
        {"lemniscate", &t.lemniscate}, {"log_2pi", &t.log_2pi},
    };
    switch (parse_format(o.format)) {
    case OutputFormat::json: {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [name, c] : rows) j[name] = {{"value", c->value}, {"provenance", std::string(c->provenance)}};
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "name,value\n";
        for (const auto& [name, c] : rows) out << name << ',' << format_value(c->value) << '\n';
        break;
    case OutputFormat::text:
        for (const auto& [name, c] : rows)
            out << name << " = " << format_value(c->value) << "  # " << c->provenance << '\n';
        break;
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& max_evals_env) {
    Options o;
    CLI::App app{"Cross-checks representations of the Glaisher-Kinkelin constant", "glk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    const auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    const auto add_tol = [&o](CLI::App* sub) {
        sub->add_option("--tol", o.tol, "Absolute and relative quadrature tolerance")
            ->check(CLI::Range(min_tol, max_tol));
    };
    const auto add_series = [&o](CLI::App* sub) {
        sub->add_option("--prime-limit", o.prime_limit, "Largest prime in the Euler product");
        sub->add_option("--barnes-n", o.barnes_n, "Index of the Barnes G limit sequence");
    };

    auto* list = app.add_subcommand("list", "List the representations of log A");

    auto* eval = app.add_subcommand("eval", "Evaluate one representation");
    eval->add_option("--rep", o.rep, "Representation tag, e.g. eq28 or eq28_schaar_new")->required();
    add_tol(eval);
    add_format(eval);
    add_series(eval);

    auto* verify = app.add_subcommand("verify", "Evaluate every representation and compare");
    add_tol(verify);
    add_format(verify);
    add_series(verify);

    auto* special_cmd = app.add_subcommand("special", "Binet function, Stieltjes constants, pinned constants");
    special_cmd->require_subcommand(1);
    auto* mu = special_cmd->add_subcommand("mu", "Binet function mu(x)");
    auto* nu = special_cmd->add_subcommand("nu", "nu(x) = mu'(x) + 1/(2x)");
    auto* stieltjes = special_cmd->add_subcommand("stieltjes", "Generalized Stieltjes constant gamma_n(z)");
    auto* constants = special_cmd->add_subcommand("constants", "Pinned reference constants");
    for (auto* sub : {mu, nu}) {
        sub->add_option("--x", o.x, "Argument, x > 0")->required();
        sub->add_option("--method", o.method, "Method or variant name");
        add_tol(sub);
        add_format(sub);
    }
    stieltjes->add_option("--n", o.n, "Order, n >= 0")->required();
    stieltjes->add_option("--z", o.z, "Argument, z > 0");
    add_tol(stieltjes);
    add_format(stieltjes);
    add_format(constants);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const quad::Config cfg = make_config(o.tol, max_evals_env);
        if (*list) return cmd_list(out);
        if (*eval) return cmd_eval(o, cfg, out, err);
        if (*verify) return cmd_verify(o, cfg, out);
        if (*mu) return cmd_mu(o, cfg, out);
        if (*nu) return cmd_nu(o, cfg, out);
        if (*stieltjes) return cmd_stieltjes(o, cfg, out);
        if (*constants) return cmd_constants(o, out);
    } catch (const UsageError& e) {
        err << "glk: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "glk: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "glk: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "glk: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_usage;
}

} // namespace glk::cli
