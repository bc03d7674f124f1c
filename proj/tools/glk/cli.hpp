#ifndef GLK_TOOLS_CLI_HPP
#define GLK_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace glk::cli {

enum class OutputFormat { text, json, csv };

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_numerical = 3,
};

/// Runs the command line `args` (without the program name). `max_evals_env`
/// carries the value of GLK_MAX_EVALS when it is set. Everything is written
/// after the computation has finished.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& max_evals_env = std::nullopt);

} // namespace glk::cli

#endif // GLK_TOOLS_CLI_HPP
