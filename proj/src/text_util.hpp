#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "howe/errors.hpp"

namespace howe::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end)
        throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return value;
}

/// Comma-separated integers; the empty (or blank) string is the empty list.
inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    s = trim(s);
    if (s.empty()) return out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

inline std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace howe::detail
