#include "metallic/fixed_real.hpp"

#include "metallic/error.hpp"

#include <stdexcept>

namespace metallic {

Rational FixedReal::to_rational() const {
    return Rational(mantissa_, Integer::pow10(digits_));
}

void FixedReal::require_same_scale(const FixedReal& other) const {
    if (digits_ != other.digits_) {
        throw std::logic_error("FixedReal scale mismatch");
    }
}

FixedReal FixedReal::abs_diff(const FixedReal& other) const {
    require_same_scale(other);
    return FixedReal((mantissa_ - other.mantissa_).abs(), digits_);
}

bool FixedReal::within_ulps(const FixedReal& other, const Integer& k) const {
    require_same_scale(other);
    return (mantissa_ - other.mantissa_).abs() <= k;
}

bool FixedReal::within_ulps(const FixedReal& other, long long k) const {
    return within_ulps(other, Integer(k));
}

bool FixedReal::operator==(const FixedReal& rhs) const {
    return digits_ == rhs.digits_ && mantissa_ == rhs.mantissa_;
}

std::strong_ordering FixedReal::operator<=>(const FixedReal& rhs) const {
    require_same_scale(rhs);
    return mantissa_ <=> rhs.mantissa_;
}

std::string FixedReal::to_string() const {
    std::string body = mantissa_.abs().to_string();
    if (digits_ == 0) {
        return mantissa_.is_negative() ? "-" + body : body;
    }
    if (body.size() <= digits_) {
        body.insert(0, digits_ + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits_, ".");
    return mantissa_.is_negative() ? "-" + body : body;
}

FixedReal fixed_from_rational(const Rational& x, std::size_t digits) {
    Integer mantissa = x.numerator().mul_pow10(digits) / x.denominator();
    return FixedReal(std::move(mantissa), digits);
}

FixedReal sqrt_fixed(const Rational& x, std::size_t digits) {
    if (x.is_negative()) {
        throw DomainError("sqrt_fixed of negative value");
    }
    // floor(sqrt(p/q) * 10^d) = isqrt(floor(p * 10^(2d) / q)): the floors
    // commute because the square of the result is an integer.
    Integer scaled = x.numerator().mul_pow10(2 * digits) / x.denominator();
    return FixedReal(isqrt(scaled), digits);
}

} // namespace metallic
