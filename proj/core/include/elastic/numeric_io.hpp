#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace elastic {

/// Shortest decimal form that reads back to the same double.
std::string format_shortest(double value);

/// Fixed 17 significant digits, enough to round-trip any double.
std::string format_full(double value);

/// Parses a whole token as a finite or infinite double; nullopt on any leftover characters.
std::optional<double> parse_double(std::string_view token);

}  // namespace elastic
