#include "metallic/roots.hpp"

#include "metallic/error.hpp"
#include "metallic/integer.hpp"

#include <utility>

namespace metallic {

namespace {

Rational half(Rational x) {
    return x / Rational(2);
}

Rational discriminant_of(const Rational& a, const Rational& b) {
    return a * a + Rational(4) * b;
}

} // namespace

QuadraticRoots::QuadraticRoots(Rational a, Rational b, std::size_t digits)
    : a_(std::move(a)), b_(std::move(b)), discriminant_(discriminant_of(a_, b_)),
      digits_(digits) {
    if (discriminant_.is_negative()) {
        throw DomainError("complex roots out of scope");
    }
    Rational root = sqrt_fixed(discriminant_, digits_).to_rational();
    plus_ = fixed_from_rational(half(a_ + root), digits_);
    minus_ = fixed_from_rational(half(a_ - root), digits_);
}

Rational QuadraticRoots::product_tolerance() const {
    Rational ulp(Integer(1), Integer::pow10(digits_));
    Rational sum = plus_.to_rational().abs() + minus_.to_rational().abs() + Rational(1);
    return Rational(2) * sum * ulp;
}

FixedReal phi(const Rational& a, const Rational& b, std::size_t digits) {
    return QuadraticRoots(a, b, digits).plus_root();
}

FixedReal minus_root(const Rational& a, const Rational& b, std::size_t digits) {
    return QuadraticRoots(a, b, digits).minus_root();
}

RootIdentityResult check_reciprocal_identity(const Rational& a, const Rational& b,
                                             std::size_t digits) {
    FixedReal lhs = phi(a, b, digits);
    if (lhs.is_zero()) {
        throw PreconditionError(
            "phi(a,b) is zero at this precision; the identity phi = a + b/phi "
            "holds only so long as phi(a,b) != 0");
    }
    FixedReal rhs = fixed_from_rational(a + b / lhs.to_rational(), digits);
    RootIdentityResult result{false, lhs, rhs, lhs.abs_diff(rhs), 8};
    result.holds = result.error.mantissa() <= Integer(result.tolerance_ulps);
    return result;
}

RootIdentityResult check_sqrt_identity(const Rational& a, const Rational& b,
                                       std::size_t digits) {
    FixedReal lhs = phi(a, b, digits);
    if (lhs.is_negative()) {
        throw PreconditionError("phi(a,b) < 0: it cannot equal a principal square root");
    }
    Rational radicand = b + a * lhs.to_rational();
    if (radicand.is_negative()) {
        throw PreconditionError("negative radicand b + a*phi(a,b)");
    }
    FixedReal rhs = sqrt_fixed(radicand, digits);
    RootIdentityResult result{false, lhs, rhs, lhs.abs_diff(rhs), 8};
    result.holds = result.error.mantissa() <= Integer(result.tolerance_ulps);
    return result;
}

FixedReal dominant_root_k(const std::vector<Rational>& coefficients, std::size_t digits) {
    if (coefficients.empty()) {
        throw PreconditionError("dominant root needs at least one coefficient");
    }
    Rational sum(0);
    for (const Rational& c : coefficients) {
        if (!(c > Rational(0))) {
            throw PreconditionError(
                "dominant-root existence not guaranteed: coefficients must be positive");
        }
        sum += c;
    }

    // p(x) = x^k - a_1 x^{k-1} - ... - a_k by Horner; sign is exact.
    auto evaluate = [&coefficients](const Rational& x) {
        Rational acc = x;
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            acc -= coefficients[i];
            if (i + 1 < coefficients.size()) {
                acc *= x;
            }
        }
        return acc;
    };

    // Bisection over mantissas keeps the invariant p(lo) <= 0 < p(hi); the
    // final lo is the floor of the root at this scale. p(0) = -a_k < 0 and
    // p(1 + sum) > 0 bracket it.
    const Integer scale = Integer::pow10(digits);
    Rational upper = Rational(1) + sum;
    Integer hi = (upper.numerator() * scale + upper.denominator() - Integer(1)) /
                 upper.denominator();
    Integer lo(0);
    const Integer one(1);
    const Integer two(2);
    while (hi - lo > one) {
        Integer mid = (lo + hi) / two;
        Rational sign = evaluate(Rational(mid, scale));
        if (sign.is_negative() || sign.is_zero()) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return FixedReal(std::move(lo), digits);
}

} // namespace metallic
