#pragma once

#include "metallic/integer.hpp"
#include "metallic/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace metallic {

// Scaled-integer decimal: represents mantissa * 10^-digits exactly.
//
// One ulp is 10^-digits. Values produced by the constructors below are exact;
// the conversion functions state their error bound in ulps, and every
// approximate comparison in the library is phrased in ulps. There is no
// floating point anywhere in the computation path.
class FixedReal {
public:
    FixedReal() : digits_(0) {}
    FixedReal(Integer mantissa, std::size_t digits)
        : mantissa_(std::move(mantissa)), digits_(digits) {}

    const Integer& mantissa() const { return mantissa_; }
    std::size_t digits() const { return digits_; }

    bool is_zero() const { return mantissa_.is_zero(); }
    bool is_negative() const { return mantissa_.is_negative(); }

    // Exact value mantissa / 10^digits.
    Rational to_rational() const;

    // |this - other|; both operands must share the same scale.
    FixedReal abs_diff(const FixedReal& other) const;

    // |this - other| <= k ulp. Same-scale only.
    bool within_ulps(const FixedReal& other, const Integer& k) const;
    bool within_ulps(const FixedReal& other, long long k) const;

    bool operator==(const FixedReal& rhs) const;
    std::strong_ordering operator<=>(const FixedReal& rhs) const;

    // Optional leading '-', integer part, '.', exactly `digits` fractional
    // digits (zero-padded). digits = 0 renders as a plain integer.
    std::string to_string() const;

private:
    Integer mantissa_;
    std::size_t digits_;

    void require_same_scale(const FixedReal& other) const;
};

// Truncation of x toward zero to `digits` decimals; error in (-1, 1) ulp and
// |result| <= |x|.
FixedReal fixed_from_rational(const Rational& x, std::size_t digits);

// Floor of sqrt(x) to `digits` decimals; error in [0, 1) ulp. Throws
// DomainError for negative x.
FixedReal sqrt_fixed(const Rational& x, std::size_t digits);

} // namespace metallic
