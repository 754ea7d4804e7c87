#include "metallic/numerics.hpp"

#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

using metallic::DomainError;
using metallic::FixedReal;
using metallic::Integer;
using metallic::PreconditionError;
using metallic::Rational;

namespace {

// Deterministic generator; raw engine output only, so results do not depend
// on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 engine{0x5eed5eedULL};

    std::uint64_t next(std::uint64_t bound) { return engine() % bound; }

    Integer integer(std::size_t maxDigits, bool allowNegative = true) {
        std::size_t len = 1 + next(maxDigits);
        std::string s;
        if (allowNegative && next(2) == 0) {
            s.push_back('-');
        }
        s.push_back(static_cast<char>('1' + next(9)));
        for (std::size_t i = 1; i < len; ++i) {
            s.push_back(static_cast<char>('0' + next(10)));
        }
        return Integer::from_string(s);
    }

    // Limb values that stress the long-division estimate and add-back path.
    Integer adversarial(std::size_t maxLimbs) {
        static const std::uint64_t specials[] = {0, 1, 2, 999999999, 999999998,
                                                 500000000, 499999999};
        std::size_t limbs = 1 + next(maxLimbs);
        Integer base(1000000000);
        Integer value(0);
        for (std::size_t i = 0; i < limbs; ++i) {
            std::uint64_t limb = next(3) == 0 ? specials[next(7)] : next(1000000000);
            value = value * base + Integer(static_cast<long long>(limb));
        }
        return value;
    }
};

} // namespace

TEST_CASE("integer string round trip and canonical forms") {
    CHECK(Integer(0).to_string() == "0");
    CHECK(Integer(-1).to_string() == "-1");
    CHECK(Integer(1000000000LL).to_string() == "1000000000");
    CHECK(Integer::from_string("-0").to_string() == "0");
    CHECK(Integer::from_string("000123").to_string() == "123");
    const std::string big = "123456789012345678901234567890123456789";
    CHECK(Integer::from_string(big).to_string() == big);
    CHECK(Integer::from_string("-" + big).to_string() == "-" + big);
    CHECK_THROWS_AS(Integer::from_string(""), PreconditionError);
    CHECK_THROWS_AS(Integer::from_string("-"), PreconditionError);
    CHECK_THROWS_AS(Integer::from_string("12x3"), PreconditionError);
    CHECK_THROWS_AS(Integer::from_string("1.5"), PreconditionError);
}

TEST_CASE("integer arithmetic basics") {
    CHECK(Integer(7) + Integer(-7) == Integer(0));
    CHECK((Integer(7) + Integer(-7)).signum() == 0);
    CHECK(Integer(5) - Integer(8) == Integer(-3));
    CHECK(Integer(-4) * Integer(-25) == Integer(100));
    CHECK(Integer::from_string("999999999999999999") + Integer(1) ==
          Integer::from_string("1000000000000000000"));

    // Truncated division semantics.
    auto [q1, r1] = Integer::divmod(Integer(7), Integer(2));
    CHECK(q1 == Integer(3));
    CHECK(r1 == Integer(1));
    auto [q2, r2] = Integer::divmod(Integer(-7), Integer(2));
    CHECK(q2 == Integer(-3));
    CHECK(r2 == Integer(-1));
    auto [q3, r3] = Integer::divmod(Integer(7), Integer(-2));
    CHECK(q3 == Integer(-3));
    CHECK(r3 == Integer(1));
    CHECK_THROWS_AS(Integer(1) / Integer(0), DomainError);
}

TEST_CASE("integer division against multiply-add oracle") {
    Rng rng;
    for (int iter = 0; iter < 4000; ++iter) {
        Integer a = iter % 2 == 0 ? rng.integer(60) : rng.adversarial(7);
        Integer b = iter % 2 == 0 ? rng.integer(30) : rng.adversarial(4);
        if (b.is_zero()) {
            continue;
        }
        auto [q, r] = Integer::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) {
            CHECK(r.signum() == a.signum());
        }
    }
}

TEST_CASE("integer division small-value cross check") {
    for (long long a = -40; a <= 40; ++a) {
        for (long long b = -9; b <= 9; ++b) {
            if (b == 0) {
                continue;
            }
            auto [q, r] = Integer::divmod(Integer(a), Integer(b));
            CHECK(q == Integer(a / b));
            CHECK(r == Integer(a % b));
        }
    }
}

TEST_CASE("integer gcd and pow10") {
    CHECK(Integer::gcd(Integer(12), Integer(18)) == Integer(6));
    CHECK(Integer::gcd(Integer(-12), Integer(18)) == Integer(6));
    CHECK(Integer::gcd(Integer(0), Integer(0)) == Integer(0));
    CHECK(Integer::gcd(Integer(0), Integer(5)) == Integer(5));
    CHECK(Integer::pow10(0) == Integer(1));
    CHECK(Integer::pow10(10).to_string() == "10000000000");
    CHECK(Integer(7).mul_pow10(11).to_string() == "700000000000");

    Rng rng;
    for (int iter = 0; iter < 300; ++iter) {
        Integer a = rng.integer(25);
        Integer b = rng.integer(25);
        Integer g = Integer::gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("isqrt examples and bracketing property") {
    CHECK(isqrt(Integer(25)) == Integer(5));
    CHECK(isqrt(Integer(0)) == Integer(0));
    CHECK(isqrt(Integer(26)) == Integer(5));
    CHECK(isqrt(Integer(1)) == Integer(1));
    CHECK(isqrt(Integer(3)) == Integer(1));
    CHECK(isqrt(Integer(4)) == Integer(2));
    CHECK_THROWS_AS(isqrt(Integer(-1)), DomainError);

    Rng rng;
    for (int iter = 0; iter < 500; ++iter) {
        Integer n = rng.integer(50, /*allowNegative=*/false);
        Integer r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + Integer(1)) * (r + Integer(1)) > n);
    }
    // Perfect squares land exactly.
    for (int iter = 0; iter < 200; ++iter) {
        Integer x = rng.integer(25, /*allowNegative=*/false);
        CHECK(isqrt(x * x) == x);
    }
}

TEST_CASE("rational reduction and rendering") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(1, -2).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational::from_string("89/55").numerator() == Integer(89));
    CHECK(Rational::from_string("-3").to_string() == "-3");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::from_string("a/b"), PreconditionError);
}

TEST_CASE("rational arithmetic examples") {
    CHECK(Rational(1) + Rational(2, 3) == Rational(5, 3));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(5, 3) - Rational(2, 3) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 5).reciprocal() == Rational(5, 7));
}

TEST_CASE("rational arithmetic round trips exactly") {
    Rng rng;
    for (int iter = 0; iter < 400; ++iter) {
        Rational x(rng.integer(15), rng.integer(15, false) + Integer(1));
        Rational y(rng.integer(15), rng.integer(15, false) + Integer(1));
        CHECK((x + y) - y == x);
        if (!y.is_zero()) {
            CHECK((x * y) / y == x);
        }
    }
}

TEST_CASE("fixed_from_rational on classic convergents") {
    CHECK(fixed_from_rational(Rational(89, 55), 4).to_string() == "1.6181");
    CHECK(fixed_from_rational(Rational(5, 3), 4).to_string() == "1.6666");
    CHECK(fixed_from_rational(Rational(3, 2), 1).to_string() == "1.5");
}

TEST_CASE("fixed_from_rational truncates toward zero within one ulp") {
    CHECK(fixed_from_rational(Rational(-89, 55), 4).to_string() == "-1.6181");
    CHECK(fixed_from_rational(Rational(1, 3), 0).to_string() == "0");
    CHECK(fixed_from_rational(Rational(1, 10000), 4).to_string() == "0.0001");
    CHECK(fixed_from_rational(Rational(-1, 3), 4).to_string() == "-0.3333");

    Rng rng;
    for (int iter = 0; iter < 300; ++iter) {
        Rational r(rng.integer(12), rng.integer(12, false) + Integer(1));
        std::size_t d = rng.next(10);
        FixedReal f = fixed_from_rational(r, d);
        Rational err = (r - f.to_rational()).abs();
        CHECK(err < Rational(Integer(1), Integer::pow10(d)));
        CHECK(f.to_rational().abs() <= r.abs());
    }
}

TEST_CASE("sqrt_fixed floor semantics") {
    CHECK(sqrt_fixed(Rational(5), 4).to_string() == "2.2360");
    CHECK(sqrt_fixed(Rational(4), 6).to_string() == "2.000000");
    CHECK(sqrt_fixed(Rational(2), 4).to_string() == "1.4142");
    CHECK_THROWS_AS(sqrt_fixed(Rational(-1), 4), DomainError);

    // Independent bracketing oracle: m^2 <= x*10^(2d) < (m+1)^2.
    Rng rng;
    for (int iter = 0; iter < 200; ++iter) {
        Rational x(rng.integer(10, false), rng.integer(10, false) + Integer(1));
        std::size_t d = rng.next(12);
        FixedReal s = sqrt_fixed(x, d);
        const Integer& m = s.mantissa();
        Rational scaled = x * Rational(Integer::pow10(2 * d));
        CHECK(Rational(m * m) <= scaled);
        CHECK(Rational((m + Integer(1)) * (m + Integer(1))) > scaled);
    }

    // Exact when the argument is a perfect square of an integer.
    for (long long v = 0; v <= 30; ++v) {
        FixedReal s = sqrt_fixed(Rational(v * v), 7);
        CHECK(s.to_rational() == Rational(v));
    }
}

TEST_CASE("fixed real rendering edge cases") {
    CHECK(FixedReal(Integer(-6180), 4).to_string() == "-0.6180");
    CHECK(FixedReal(Integer(0), 4).to_string() == "0.0000");
    CHECK(FixedReal(Integer(12), 4).to_string() == "0.0012");
    CHECK(FixedReal(Integer(123456), 2).to_string() == "1234.56");
    CHECK(FixedReal(Integer(5), 0).to_string() == "5");

    FixedReal a(Integer(16180), 4);
    FixedReal b(Integer(16184), 4);
    CHECK(a.abs_diff(b).to_string() == "0.0004");
    CHECK(a.within_ulps(b, 4));
    CHECK_FALSE(a.within_ulps(b, 3));
    CHECK(a < b);
}
