#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "packets/errors.hpp"
#include "packets/sign.hpp"

namespace packets {

// A root of unity e(num/den) = exp(2*pi*i*num/den), stored as a reduced
// fraction mod 1. Equality is exact; no complex arithmetic is involved.
class RootOfUnity {
  public:
    constexpr RootOfUnity() : num_(0), den_(1) {}

    static RootOfUnity of(std::int64_t num, std::int64_t den) {
        if (den <= 0) throw ParameterError("root-of-unity order must be positive");
        num %= den;
        if (num < 0) num += den;
        std::int64_t g = std::gcd(num, den);
        if (num == 0) return RootOfUnity(0, 1);
        return RootOfUnity(num / g, den / g);
    }

    static RootOfUnity one() { return RootOfUnity(0, 1); }
    static RootOfUnity minus_one() { return RootOfUnity(1, 2); }
    static RootOfUnity from_sign(Sign s) { return s.is_plus() ? one() : minus_one(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t order() const { return den_; }

    bool is_one() const { return num_ == 0; }
    bool is_minus_one() const { return num_ == 1 && den_ == 2; }

    RootOfUnity operator*(const RootOfUnity& o) const {
        return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RootOfUnity inverse() const { return of(-num_, den_); }
    RootOfUnity pow(std::int64_t k) const { return of(num_ * k, den_); }

    bool operator==(const RootOfUnity& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_one()) return "1";
        if (is_minus_one()) return "-1";
        return "e(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
    }

  private:
    constexpr RootOfUnity(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
    std::int64_t num_; // 0 <= num < den, gcd(num, den) = 1
    std::int64_t den_;
};

} // namespace packets
