#include "howe/symbol.hpp"

#include <algorithm>
#include <numeric>

#include "howe/errors.hpp"
#include "text_util.hpp"

namespace howe {

namespace {

void check_row(const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0) throw DomainError("symbol entries must be non-negative");
        if (i + 1 < row.size() && row[i] <= row[i + 1])
            throw DomainError("symbol rows must be strictly decreasing");
    }
}

int row_sum(const std::vector<int>& row) { return std::accumulate(row.begin(), row.end(), 0); }

int rank_of(const std::vector<int>& top, const std::vector<int>& bottom) {
    const int n = static_cast<int>(top.size() + bottom.size()) - 1;
    return row_sum(top) + row_sum(bottom) - (n * n) / 4;
}

Partition staircase_down(const std::vector<int>& row) {
    const int m = static_cast<int>(row.size());
    std::vector<int> parts(row.size());
    for (int i = 0; i < m; ++i) parts[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i)] - (m - 1 - i);
    return Partition(std::move(parts));
}

std::vector<int> staircase_up(const Partition& p, int m) {
    std::vector<int> row(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) row[static_cast<std::size_t>(i)] = p.at(static_cast<std::size_t>(i) + 1) + (m - 1 - i);
    return row;
}

}  // namespace

Symbol::Symbol(std::vector<int> top, std::vector<int> bottom) {
    check_row(top);
    check_row(bottom);
    *this = reduce(RawSymbol{std::move(top), std::move(bottom)});
}

bool Symbol::contains(Entry e) const {
    const auto& r = row(e.row);
    return std::binary_search(r.begin(), r.end(), e.value, std::greater<>());
}

int rank(const Symbol& s) { return rank_of(s.top(), s.bottom()); }
int rank(const RawSymbol& s) { return rank_of(s.top, s.bottom); }
int defect(const Symbol& s) { return static_cast<int>(s.top().size()) - static_cast<int>(s.bottom().size()); }
int defect(const RawSymbol& s) { return static_cast<int>(s.top.size()) - static_cast<int>(s.bottom.size()); }

Symbol transpose(const Symbol& s) { return reduce(RawSymbol{s.bottom(), s.top()}); }

Symbol reduce(const RawSymbol& raw) {
    check_row(raw.top);
    check_row(raw.bottom);
    std::vector<int> top = raw.top;
    std::vector<int> bottom = raw.bottom;
    while (!top.empty() && !bottom.empty() && top.back() == 0 && bottom.back() == 0) {
        top.pop_back();
        bottom.pop_back();
        for (int& x : top) --x;
        for (int& x : bottom) --x;
    }
    Symbol s;
    s.top_ = std::move(top);
    s.bottom_ = std::move(bottom);
    return s;
}

RawSymbol inflate(const Symbol& s, int k) {
    RawSymbol raw{s.top(), s.bottom()};
    for (int step = 0; step < k; ++step) {
        for (int& x : raw.top) ++x;
        for (int& x : raw.bottom) ++x;
        raw.top.push_back(0);
        raw.bottom.push_back(0);
    }
    return raw;
}

BiPartition upsilon(const Symbol& s) { return {staircase_down(s.top()), staircase_down(s.bottom())}; }

Symbol upsilon_inverse(const BiPartition& b, int target_defect) {
    const int top_len = static_cast<int>(b.top.length());
    const int bottom_len = static_cast<int>(b.bottom.length());
    // Smallest (m1, m2) with m1 - m2 = target_defect that fits both partitions.
    const int m2 = std::max({bottom_len, top_len - target_defect, -target_defect, 0});
    const int m1 = m2 + target_defect;
    return reduce(RawSymbol{staircase_up(b.top, m1), staircase_up(b.bottom, m2)});
}

int defect_rank_offset(int beta) { return (beta * beta) / 4; }

std::vector<Symbol> enumerate_symbols(int n, int beta) {
    std::vector<Symbol> out;
    const int k = n - defect_rank_offset(beta);
    if (k < 0) return out;
    for (const auto& b : bipartitions_of(k)) out.push_back(upsilon_inverse(b, beta));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Symbol& s) {
    return "[" + detail::join_ints(s.top()) + "|" + detail::join_ints(s.bottom()) + "]";
}

std::string to_string(const RawSymbol& s) {
    return "[" + detail::join_ints(s.top) + "|" + detail::join_ints(s.bottom) + "]";
}

std::string to_string(Entry e) { return std::string(e.row == Row::Top ? "t:" : "b:") + std::to_string(e.value); }

Symbol parse_symbol(std::string_view text) {
    const auto body = detail::trim(text);
    if (body.size() < 3 || body.front() != '[' || body.back() != ']')
        throw ParseError("symbol literal must look like [a1,a2|b1,b2], got '" + std::string(text) + "'");
    const auto inner = body.substr(1, body.size() - 2);
    const auto bar = inner.find('|');
    if (bar == std::string_view::npos || inner.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("symbol literal needs exactly one '|': '" + std::string(text) + "'");
    try {
        return Symbol(detail::parse_int_list(inner.substr(0, bar)), detail::parse_int_list(inner.substr(bar + 1)));
    } catch (const DomainError& e) {
        throw ParseError("invalid symbol '" + std::string(text) + "': " + e.what());
    }
}

}  // namespace howe
