#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metallic {

// Arbitrary-precision signed integer.
//
// Magnitude is a little-endian vector of base-10^9 limbs with no leading zero
// limb; the canonical zero has sign 0 and an empty magnitude, so there is no
// negative zero. All arithmetic is exact for all magnitudes. The decimal base
// makes rendering and power-of-ten scaling cheap, which is what FixedReal
// leans on.
class Integer {
public:
    Integer() = default;
    Integer(long long value);

    // Parses an optionally signed run of decimal digits. Throws
    // PreconditionError on anything else.
    static Integer from_string(std::string_view text);

    // 10^exponent.
    static Integer pow10(std::size_t exponent);

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }

    Integer abs() const;
    Integer operator-() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    Integer& operator/=(const Integer& rhs);
    Integer& operator%=(const Integer& rhs);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Integer operator/(Integer lhs, const Integer& rhs) { return lhs /= rhs; }
    friend Integer operator%(Integer lhs, const Integer& rhs) { return lhs %= rhs; }

    // Truncating division: quotient is rounded toward zero, remainder carries
    // the dividend's sign and |remainder| < |divisor|. Throws DomainError when
    // the divisor is zero.
    static std::pair<Integer, Integer> divmod(const Integer& dividend, const Integer& divisor);

    // Nonnegative gcd of the magnitudes; gcd(0, 0) = 0.
    static Integer gcd(const Integer& a, const Integer& b);

    // this * 10^k.
    Integer mul_pow10(std::size_t k) const;

    bool operator==(const Integer& rhs) const;
    std::strong_ordering operator<=>(const Integer& rhs) const;

    std::string to_string() const;

    // Number of decimal digits of the magnitude; 1 for zero.
    std::size_t digit_count() const;

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;
    static constexpr int kBaseDigits = 9;

    using Magnitude = std::vector<std::uint32_t>;

    int sign_ = 0;
    Magnitude mag_;

    static void trim(Magnitude& m);
    static int compare_mag(const Magnitude& a, const Magnitude& b);
    static Magnitude add_mag(const Magnitude& a, const Magnitude& b);
    static Magnitude sub_mag(const Magnitude& a, const Magnitude& b); // requires a >= b
    static Magnitude mul_mag(const Magnitude& a, const Magnitude& b);
    static Magnitude mul_small(const Magnitude& a, std::uint32_t s);
    static std::pair<Magnitude, Magnitude> divmod_mag(const Magnitude& u, const Magnitude& v);

    Integer(int sign, Magnitude mag);

    friend Integer isqrt(const Integer& n);
};

// Exact floor square root: returns r with r^2 <= n < (r+1)^2.
// Throws DomainError for negative input.
Integer isqrt(const Integer& n);

} // namespace metallic
