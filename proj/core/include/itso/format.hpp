#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace itso {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Parses a full token as a double; nullopt on trailing garbage or no parse.
std::optional<double> parse_double(std::string_view text);

}  // namespace itso
