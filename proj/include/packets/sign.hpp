#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packets/errors.hpp"

namespace packets {

// A value in {+1, -1}. Dedicated type so that invalid values are
// unrepresentable; arithmetic stays in the group of order two.
class Sign {
  public:
    constexpr Sign() : minus_(false) {}

    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }

    // (-1)^n for any integer n.
    static constexpr Sign of_parity(std::int64_t n) { return Sign((n % 2) != 0); }

    static Sign from_int(int v) {
        if (v == 1) return plus();
        if (v == -1) return minus();
        throw ParameterError("sign must be +1 or -1, got " + std::to_string(v));
    }

    constexpr int value() const { return minus_ ? -1 : 1; }
    constexpr bool is_plus() const { return !minus_; }
    constexpr bool is_minus() const { return minus_; }

    constexpr Sign operator*(Sign o) const { return Sign(minus_ != o.minus_); }
    Sign& operator*=(Sign o) {
        minus_ = (minus_ != o.minus_);
        return *this;
    }
    constexpr bool operator==(Sign o) const { return minus_ == o.minus_; }
    constexpr bool operator!=(Sign o) const { return minus_ != o.minus_; }

    std::string to_string() const { return minus_ ? "-1" : "+1"; }

  private:
    constexpr explicit Sign(bool minus) : minus_(minus) {}
    bool minus_;
};

// A +-1 valued character on a component group A = (Z/2)^k, stored as the
// vector of values on the standard generators e_1..e_k (or f_1..f_k).
struct SignChar {
    std::vector<Sign> signs;
    char family = 'e'; // generator label family: 'e' or 'f'

    SignChar() = default;
    SignChar(std::vector<Sign> s, char fam) : signs(std::move(s)), family(fam) {}

    std::size_t size() const { return signs.size(); }

    Sign at(std::size_t i) const {
        if (i >= signs.size())
            throw ParameterError("sign character index " + std::to_string(i) + " out of range");
        return signs[i];
    }

    std::string label(std::size_t i) const { return std::string(1, family) + std::to_string(i + 1); }

    // The central element -1 is the sum of all generators.
    Sign evaluate_on_minus_one() const {
        Sign prod = Sign::plus();
        for (Sign s : signs) prod *= s;
        return prod;
    }

    bool operator==(const SignChar& o) const { return signs == o.signs && family == o.family; }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < signs.size(); ++i) {
            if (i) out += ",";
            out += signs[i].to_string();
        }
        return out + ")";
    }
};

} // namespace packets
