#pragma once

#include <cstdlib>
#include <compare>
#include <stdexcept>
#include <string>

namespace w15j {

// Half-integer angular momentum label, stored as 2j so all arithmetic is exact.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    double value() const { return 0.5 * twice_; }
    // [j] = 2j + 1
    constexpr int dim() const { return twice_ + 1; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    HalfInt abs() const { return HalfInt(std::abs(twice_)); }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    constexpr explicit HalfInt(int t) : twice_(t) {}
    int twice_ = 0;
};

// |a-b| <= c <= a+b with integer perimeter.
inline bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    if ((ta + tb + tc) % 2 != 0) return false;
    return std::abs(ta - tb) <= tc && tc <= ta + tb;
}

// (-1)^{x} for x given as 2x; x must come out an integer power.
inline int sign_from_twice(long twice_exponent) {
    long m = twice_exponent % 4;
    if (m < 0) m += 4;
    if (m == 0) return 1;
    if (m == 2) return -1;
    throw std::domain_error("phase (-1)^x with half-integer exponent, 2x=" +
                            std::to_string(twice_exponent));
}

} // namespace w15j
