#include "howe/partition.hpp"

#include <algorithm>
#include <numeric>

#include "howe/errors.hpp"
#include "text_util.hpp"

namespace howe {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw DomainError("partition has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int BiPartition::size() const { return weight(top) + weight(bottom); }

int weight(const Partition& p) {
    return std::accumulate(p.parts().begin(), p.parts().end(), 0);
}

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool precede(const Partition& p, const Partition& q) {
    const std::size_t n = std::max(p.length(), q.length());
    for (std::size_t i = 1; i <= n; ++i) {
        if (p.at(i) > q.at(i) || p.at(i) < q.at(i) - 1) return false;
    }
    return true;
}

bool precede_transposed(const Partition& p, const Partition& q) {
    const std::size_t n = std::max(p.length(), q.length());
    for (std::size_t i = 1; i <= n; ++i) {
        if (p.at(i) > q.at(i) || p.at(i) < q.at(i + 1)) return false;
    }
    return true;
}

namespace {

// Row i of q ranges over [p_i, p_{i-1}] (p_0 = infinity); rows past length(p)
// only the first extra row can be non-empty.
void extend_rows(const Partition& p, std::size_t row, int remaining, std::vector<int>& current,
                 std::vector<Partition>& out) {
    const std::size_t rows = p.length() + 1;
    if (row > rows) {
        if (remaining == 0) out.emplace_back(current);
        return;
    }
    const int lo = p.at(row);
    const int hi = row == 1 ? lo + remaining : std::min(p.at(row - 1), lo + remaining);
    for (int v = hi; v >= lo; --v) {
        current.push_back(v);
        extend_rows(p, row + 1, remaining - (v - lo), current, out);
        current.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        current.push_back(v);
        partitions_rec(remaining - v, v, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> horizontal_extensions(const Partition& p, int boxes) {
    std::vector<Partition> out;
    if (boxes < 0) return out;
    std::vector<int> current;
    extend_rows(p, 1, boxes, current, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

std::vector<BiPartition> bipartitions_of(int n) {
    std::vector<BiPartition> out;
    for (int k = n; k >= 0; --k) {
        for (const auto& top : partitions_of(k))
            for (const auto& bottom : partitions_of(n - k)) out.push_back({top, bottom});
    }
    std::sort(out.begin(), out.end(), [](const BiPartition& x, const BiPartition& y) {
        if (x.top != y.top) return x.top > y.top;
        return x.bottom > y.bottom;
    });
    return out;
}

std::string to_string(const Partition& p) { return detail::join_ints(p.parts()); }

std::string to_string(const BiPartition& b) { return to_string(b.top) + ";" + to_string(b.bottom); }

Partition parse_partition(std::string_view text) {
    try {
        return Partition(detail::parse_int_list(text));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid partition '") + std::string(text) + "': " + e.what());
    }
}

BiPartition parse_bipartition(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError("bi-partition must have the form 'top;bottom'");
    return {parse_partition(text.substr(0, semi)), parse_partition(text.substr(semi + 1))};
}

}  // namespace howe
