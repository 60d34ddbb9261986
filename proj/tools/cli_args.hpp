#pragma once

#include <optional>
#include <string>
#include <utility>

namespace manta::cli {

// "0.78pi", "pi", "1/2pi" or plain radians. Throws std::invalid_argument.
double parse_angle(const std::string& text);

// "auto" yields an empty optional; anything else goes through parse_angle.
std::optional<double> parse_optional_angle(const std::string& text);

// "4" or "1..10", inclusive. Throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace manta::cli
