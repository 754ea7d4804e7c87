#include "metallic/rational.hpp"

#include "metallic/error.hpp"

namespace metallic {

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw DomainError("rational with zero denominator");
    }
    reduce();
}

Rational::Rational(long long numerator, long long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational Rational::from_string(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer::from_string(text));
    }
    Integer num = Integer::from_string(text.substr(0, slash));
    Integer den = Integer::from_string(text.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    Integer g = Integer::gcd(num_, den_);
    if (g != Integer(1)) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(den_, num_);
}

// Addition and multiplication cancel shared factors before multiplying, so
// gcd work stays on operands half the size of the naive cross products; both
// sides being reduced makes the results below reduced already.

Rational& Rational::operator+=(const Rational& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    Integer g = Integer::gcd(den_, rhs.den_);
    if (g == Integer(1)) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
        return *this;
    }
    Integer denReduced = den_ / g;
    Integer rhsDenReduced = rhs.den_ / g;
    Integer t = num_ * rhsDenReduced + rhs.num_ * denReduced;
    Integer g2 = Integer::gcd(t, g);
    num_ = t / g2;
    den_ = denReduced * (rhs.den_ / g2);
    if (num_.is_zero()) {
        den_ = Integer(1);
    }
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (is_zero() || rhs.is_zero()) {
        *this = Rational();
        return *this;
    }
    Integer g1 = Integer::gcd(num_, rhs.den_);
    Integer g2 = Integer::gcd(rhs.num_, den_);
    num_ = (num_ / g1) * (rhs.num_ / g2);
    den_ = (den_ / g2) * (rhs.den_ / g1);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    if (is_zero()) {
        return *this;
    }
    Integer g1 = Integer::gcd(num_, rhs.num_);
    Integer g2 = Integer::gcd(rhs.den_, den_);
    num_ = (num_ / g1) * (rhs.den_ / g2);
    den_ = (den_ / g2) * (rhs.num_ / g1);
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

bool Rational::operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    // Denominators are positive, so cross-multiplication preserves order.
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return num_.to_string();
    }
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace metallic
