#include "deltastar/io.hpp"

#include "deltastar/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace deltastar {

std::vector<std::uint64_t> parse_integers(std::string_view text) {
    std::vector<std::uint64_t> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v') {
            ++i;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            std::size_t end = i;
            while (end < text.size() && text[end] != '#' && !std::isspace(static_cast<unsigned char>(text[end]))) {
                ++end;
            }
            const std::string_view token = text.substr(i, end - i);
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec == std::errc::result_out_of_range) {
                throw Error(ErrorCode::parse_error,
                            "line " + std::to_string(line) + ": '" + std::string(token) + "' exceeds 64 bits");
            }
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": '" + std::string(token) +
                                                        "' is not a non-negative decimal integer");
            }
            out.push_back(value);
            i = end;
        }
    }
    return out;
}

IntegerSet parse_integer_set(std::string_view text) {
    return IntegerSet::from_unsorted(parse_integers(text));
}

KTuple parse_tuple(std::string_view text) {
    const IntegerSet set = parse_integer_set(text);
    return KTuple(std::vector<std::uint64_t>(set.begin(), set.end()));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

IntegerSet read_integer_set(const std::filesystem::path& path) {
    return parse_integer_set(read_file(path));
}

KTuple read_tuple(const std::filesystem::path& path) {
    return parse_tuple(read_file(path));
}

std::string format_integers(std::span<const std::uint64_t> values) {
    std::string out;
    for (std::uint64_t v : values) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace deltastar
