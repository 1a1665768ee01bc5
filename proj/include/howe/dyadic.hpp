#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace howe {

/// Exact k / 2^e. Normalized: k odd, or k == 0 and e == 0. e may go
/// negative internally while normalizing but is never stored negative.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(std::int64_t num) : num_(num) { normalize(); }  // NOLINT: implicit from integers
    Dyadic(std::int64_t num, int log2den) : num_(num), log2den_(log2den) { normalize(); }

    std::int64_t num() const { return num_; }
    int log2den() const { return log2den_; }
    bool is_zero() const { return num_ == 0; }
    double to_double() const;

    /// 2^-k
    static Dyadic pow2_inv(int k) { return {1, k}; }

    Dyadic operator-() const { return {-num_, log2den_}; }
    Dyadic& operator+=(const Dyadic& o);
    Dyadic& operator-=(const Dyadic& o) { return *this += -o; }
    Dyadic& operator*=(const Dyadic& o);
    /// Division by 2^k.
    Dyadic halved(int k = 1) const { return {num_, log2den_ + k}; }

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    void normalize();

    std::int64_t num_ = 0;
    int log2den_ = 0;
};

/// "3/4", "-1", "0".
std::string to_string(const Dyadic& d);

}  // namespace howe
