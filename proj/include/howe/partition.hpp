#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace howe {

/// A partition lambda_1 >= lambda_2 >= ... > 0, stored without trailing zeros.
///
/// Elementwise comparisons treat a partition as padded with infinitely many
/// zeros, so [2,1] and [2,1,0,0] are the same value.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws DomainError unless `parts` is weakly decreasing and non-negative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 1-based, zero past the end.
    int at(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// An ordered pair [top; bottom] of partitions.
struct BiPartition {
    Partition top;
    Partition bottom;

    int size() const;

    friend bool operator==(const BiPartition&, const BiPartition&) = default;
    friend auto operator<=>(const BiPartition&, const BiPartition&) = default;
};

int weight(const Partition& p);

/// Conjugate partition: transpose(p)_j = #{ i : p_i >= j }.
Partition transpose(const Partition& p);

/// p ≼ q: q_i - 1 <= p_i <= q_i for every i.
bool precede(const Partition& p, const Partition& q);

/// transpose(p) ≼ transpose(q), evaluated as q_{i+1} <= p_i <= q_i for all i.
bool precede_transposed(const Partition& p, const Partition& q);

/// All q with |q| = |p| + boxes and transpose(p) ≼ transpose(q), i.e. q/p is a
/// horizontal strip. Result is sorted in reverse-lexicographic order.
std::vector<Partition> horizontal_extensions(const Partition& p, int boxes);

/// Partitions of n in reverse-lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

/// Bi-partitions of n: top in reverse-lexicographic order, then bottom.
std::vector<BiPartition> bipartitions_of(int n);

// Text forms: "3,1" for [3,1], "" for []; "2,1;1" for a bi-partition.
std::string to_string(const Partition& p);
std::string to_string(const BiPartition& b);
Partition parse_partition(std::string_view text);
BiPartition parse_bipartition(std::string_view text);

}  // namespace howe
