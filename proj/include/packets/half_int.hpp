#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "packets/errors.hpp"

namespace packets {

// Exact element of (1/2)Z, stored as twice its value. No floating point:
// all arithmetic and comparisons are integer operations on twice_value.
class HalfInt {
  public:
    constexpr HalfInt() : twice_(0) {}

    static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }

    constexpr std::int64_t twice_value() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_strict_half() const { return twice_ % 2 != 0; }
    constexpr bool is_zero() const { return twice_ == 0; }
    constexpr bool is_positive() const { return twice_ > 0; }
    constexpr bool is_negative() const { return twice_ < 0; }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

    constexpr bool operator==(HalfInt o) const { return twice_ == o.twice_; }
    constexpr bool operator!=(HalfInt o) const { return twice_ != o.twice_; }
    constexpr bool operator<(HalfInt o) const { return twice_ < o.twice_; }
    constexpr bool operator<=(HalfInt o) const { return twice_ <= o.twice_; }
    constexpr bool operator>(HalfInt o) const { return twice_ > o.twice_; }
    constexpr bool operator>=(HalfInt o) const { return twice_ >= o.twice_; }

    std::string to_string() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    // Accepts "3", "-2", "1/2", "-7/2". Decimal notation is rejected on
    // purpose: every parameter in this library is exact.
    static HalfInt parse(const std::string& text) {
        if (text.empty()) throw ParameterError("empty half-integer literal");
        if (text.find('.') != std::string::npos)
            throw ParameterError("decimal notation rejected, use p/2 form: '" + text + "'");
        auto whole_number = [&](const std::string& part) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(part, &used);
            } catch (const std::invalid_argument&) {
                throw ParameterError("malformed half-integer: '" + text + "'");
            } catch (const std::out_of_range&) {
                throw ParameterError("half-integer out of range: '" + text + "'");
            }
            if (used != part.size())
                throw ParameterError("malformed half-integer: '" + text + "'");
            return v;
        };
        std::size_t slash = text.find('/');
        if (slash == std::string::npos) return whole(whole_number(text));
        std::int64_t num = whole_number(text.substr(0, slash));
        std::int64_t den = whole_number(text.substr(slash + 1));
        if (den == 2) return from_twice(num);
        if (den == 1) return whole(num);
        throw ParameterError("half-integer denominator must be 1 or 2: '" + text + "'");
    }

  private:
    constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_;
};

} // namespace packets
