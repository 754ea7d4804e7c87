#pragma once

#include "metallic/integer.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace metallic {

// Exact rational number. Always stored reduced with a positive denominator;
// zero is 0/1. Reduction is eager so that exact-equality comparisons between
// independently computed values are meaningful.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}
    Rational(Integer numerator, Integer denominator);
    Rational(long long numerator, long long denominator);

    // Accepts "p" or "p/q". Throws PreconditionError on malformed input and
    // DomainError on a zero denominator.
    static Rational from_string(std::string_view text);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == Integer(1); }

    Rational abs() const;
    Rational operator-() const;
    Rational reciprocal() const; // DomainError on zero

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs); // DomainError on zero divisor

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    bool operator==(const Rational& rhs) const;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    // "p" when the denominator is 1, otherwise "p/q" with q > 0.
    std::string to_string() const;

private:
    Integer num_;
    Integer den_;

    void reduce();
};

} // namespace metallic
