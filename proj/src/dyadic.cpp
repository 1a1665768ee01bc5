#include "howe/dyadic.hpp"

#include <cmath>

#include "howe/errors.hpp"

namespace howe {

namespace {

std::int64_t checked_shift(std::int64_t x, int k) {
    if (k >= 62 || (x != 0 && std::llabs(x) > (INT64_MAX >> k))) throw DomainError("dyadic overflow");
    return x * (std::int64_t{1} << k);
}

}  // namespace

void Dyadic::normalize() {
    if (num_ == 0) {
        log2den_ = 0;
        return;
    }
    while (log2den_ > 0 && (num_ % 2) == 0) {
        num_ /= 2;
        --log2den_;
    }
    if (log2den_ < 0) {
        num_ = checked_shift(num_, -log2den_);
        log2den_ = 0;
    }
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -log2den_); }

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    const int e = std::max(log2den_, o.log2den_);
    const std::int64_t a = checked_shift(num_, e - log2den_);
    const std::int64_t b = checked_shift(o.num_, e - o.log2den_);
    std::int64_t s = 0;
    if (__builtin_add_overflow(a, b, &s)) throw DomainError("dyadic overflow");
    num_ = s;
    log2den_ = e;
    normalize();
    return *this;
}

Dyadic& Dyadic::operator*=(const Dyadic& o) {
    std::int64_t p = 0;
    if (__builtin_mul_overflow(num_, o.num_, &p)) throw DomainError("dyadic overflow");
    num_ = p;
    log2den_ += o.log2den_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const Dyadic d = a - b;
    return d.num() <=> 0;
}

std::string to_string(const Dyadic& d) {
    if (d.log2den() == 0) return std::to_string(d.num());
    return std::to_string(d.num()) + "/" + std::to_string(std::int64_t{1} << d.log2den());
}

}  // namespace howe
