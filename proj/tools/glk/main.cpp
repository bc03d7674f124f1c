#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::optional<std::string> max_evals;
    if (const char* env = std::getenv("GLK_MAX_EVALS")) max_evals = env;
    return glk::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, max_evals);
}
