#pragma once

#include "deltastar/integer_set.hpp"
#include "deltastar/tuples.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltastar {

// Decimal integers separated by any whitespace; '#' comments to end of line.
// Throws parse_error with the offending line number.
std::vector<std::uint64_t> parse_integers(std::string_view text);

// Parsed values as a set; repeated values are a duplicate_element error.
IntegerSet parse_integer_set(std::string_view text);
KTuple parse_tuple(std::string_view text);

// Throws io_error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
IntegerSet read_integer_set(const std::filesystem::path& path);
KTuple read_tuple(const std::filesystem::path& path);

// One integer per line; parse_integers reads it back unchanged.
std::string format_integers(std::span<const std::uint64_t> values);

}  // namespace deltastar
