#pragma once

// Line/token helpers shared by the text readers. Not installed.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/error.hpp"

namespace permlab::detail {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

/// Non-blank lines with `#` comments stripped.
inline std::vector<Line> split_content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (!line.empty()) out.push_back(Line{number, line});
    }
    return out;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

inline std::size_t parse_size(std::string_view token, const char* what, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(std::string(what) + ": line " + std::to_string(line) +
                             ": expected a nonnegative integer, got '" + std::string(token) + "'",
                         line);
    }
    return value;
}

}  // namespace permlab::detail
