#ifndef GLK_TOOLS_RENDER_HPP
#define GLK_TOOLS_RENDER_HPP

#include <string>

#include "glk/glaisher.hpp"
#include "json.hpp"

namespace glk::cli {

inline constexpr int significant_digits = 15;
inline constexpr int text_decimals = 15;

/// x rounded to `significant_digits`; non-finite values pass through.
double round_significant(double x);

/// JSON number rounded to 15 significant digits, or null when not finite.
nlohmann::ordered_json json_number(double x);

/// Fixed-point with text_decimals places, "n/a" when not finite.
std::string fixed(double x);

nlohmann::ordered_json result_json(const glaisher::RepresentationResult& r);
nlohmann::ordered_json report_json(const glaisher::ComparisonReport& report);

std::string result_text(const glaisher::RepresentationResult& r);
std::string report_text(const glaisher::ComparisonReport& report);

std::string csv_header();
std::string result_csv(const glaisher::RepresentationResult& r);
std::string report_csv(const glaisher::ComparisonReport& report);

} // namespace glk::cli

#endif // GLK_TOOLS_RENDER_HPP
