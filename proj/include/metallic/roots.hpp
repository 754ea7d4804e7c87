#pragma once

#include "metallic/fixed_real.hpp"
#include "metallic/rational.hpp"

#include <cstddef>
#include <vector>

namespace metallic {

// Both real roots of x^2 - ax - b at a chosen precision.
//
// The square root of the discriminant is computed once and shared, so the
// truncation errors of the two roots cancel in their sum:
//   |plus + minus - a| < 2 ulp always, and
//   |plus * minus + b| < product_tolerance() (see below).
// Each root individually carries error < 2 ulp.
class QuadraticRoots {
public:
    // Throws DomainError when a^2 + 4b < 0 ("complex roots out of scope").
    QuadraticRoots(Rational a, Rational b, std::size_t digits);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& discriminant() const { return discriminant_; }
    const FixedReal& plus_root() const { return plus_; }
    const FixedReal& minus_root() const { return minus_; }
    std::size_t digits() const { return digits_; }

    // Bound on |plus * minus + b| as an exact rational:
    //   2 * (|plus| + |minus| + 1) ulp,
    // from |root_err| < 2 ulp propagated through the product.
    Rational product_tolerance() const;

private:
    Rational a_;
    Rational b_;
    Rational discriminant_;
    FixedReal plus_;
    FixedReal minus_;
    std::size_t digits_;
};

// (a + sqrt(a^2+4b)) / 2, the dominant root of x^2 - ax - b; error < 2 ulp.
FixedReal phi(const Rational& a, const Rational& b, std::size_t digits);

// (a - sqrt(a^2+4b)) / 2; error < 2 ulp.
FixedReal minus_root(const Rational& a, const Rational& b, std::size_t digits);

// Outcome of a fixed-precision identity check. The tolerance is 8 ulp: both
// operands carry < 2 ulp and pass through one division or square root.
struct RootIdentityResult {
    bool holds;
    FixedReal lhs;   // phi(a, b)
    FixedReal rhs;   // the identity's other side
    FixedReal error; // |lhs - rhs|
    long long tolerance_ulps;
};

// phi = a + b/phi (needs phi != 0; rejected below 1 ulp at this precision).
RootIdentityResult check_reciprocal_identity(const Rational& a, const Rational& b,
                                             std::size_t digits);

// phi = sqrt(b + a*phi) (needs phi >= 0 and a nonnegative radicand).
RootIdentityResult check_sqrt_identity(const Rational& a, const Rational& b,
                                       std::size_t digits);

// The unique positive root of x^k - a_1 x^{k-1} - ... - a_k for strictly
// positive coefficients, to within 1 ulp (floor of the root at `digits`
// decimals). Bisection on the exactly evaluated polynomial: unconditionally
// correct, speed irrelevant at this scale.
FixedReal dominant_root_k(const std::vector<Rational>& coefficients, std::size_t digits);

} // namespace metallic
