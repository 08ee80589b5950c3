#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cognates::text {

std::vector<std::string_view> split(std::string_view line, char sep = '\t');

/// Shortest decimal representation that parses back to the same double.
std::string format_shortest(double value);
/// Fixed-point with `digits` decimals.
std::string format_fixed(double value, int digits);

/// Whole-token parses; nullopt on trailing garbage, overflow or empty input.
std::optional<double> parse_double(std::string_view token);
std::optional<std::int64_t> parse_int(std::string_view token);

/// Decodes UTF-8 into unicode scalar values. Throws on invalid sequences.
std::u32string decode_utf8(std::string_view bytes);

}  // namespace cognates::text
