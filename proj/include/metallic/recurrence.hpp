#pragma once

#include "metallic/rational.hpp"

#include <cstddef>
#include <vector>

namespace metallic {

// Coefficients and seeds of a k-term linear recurrence
//
//   F_n = a_1 F_{n-1} + a_2 F_{n-2} + ... + a_k F_{n-k}   for n >= k,
//   F_i = seeds[i]                                         for i < k.
//
// Coefficients and seeds are exact rationals, so every term is exact. k = 1
// gives geometric sequences; k = 0 is rejected at construction.
class RecurrenceSpec {
public:
    RecurrenceSpec(std::vector<Rational> coefficients, std::vector<Rational> seeds);

    // The two-coefficient recurrence F_n = a F_{n-1} + b F_{n-2} with its
    // standard seeds F_0 = 1, F_1 = a.
    static RecurrenceSpec metallic(Rational a, Rational b);

    // Coefficients [1, 1], seeds [1, 1]: 1, 1, 2, 3, 5, 8, ...
    static RecurrenceSpec classic();

    std::size_t order() const { return coefficients_.size(); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const std::vector<Rational>& seeds() const { return seeds_; }

private:
    std::vector<Rational> coefficients_;
    std::vector<Rational> seeds_;
};

// F_n by forward iteration; exact.
Rational term(const RecurrenceSpec& spec, std::size_t n);

// Same value as term(spec, n), via k x k companion-matrix exponentiation by
// squaring over exact rationals; O(log n) matrix products.
Rational term_fast(const RecurrenceSpec& spec, std::size_t n);

// F_n / F_{n-1}, exact. Requires n >= 1; throws DomainError when F_{n-1} = 0.
Rational ratio(const RecurrenceSpec& spec, std::size_t n);

// [F_0, ..., F_n_max] in a single pass.
std::vector<Rational> terms(const RecurrenceSpec& spec, std::size_t n_max);

// Outcome of a summation identity check, carrying both evaluated sides so
// callers can report counterexamples with evidence.
struct SumIdentityResult {
    bool holds;
    Rational lhs;                  // F_N
    std::vector<Rational> addends; // the summed terms, in index order
    Rational rhs;                  // their total
};

// For odd N: F_N = F_0 + F_2 + F_4 + ... + F_{N-1} on the classic sequence.
// Exact evaluation of both sides. Even N is a precondition error.
SumIdentityResult check_odd_sum_identity(std::size_t N);

// For even N >= 2: F_N = F_0 + F_1 + F_3 + F_5 + ... + F_{N-1} on the classic
// sequence. The test suite confirms this closed form against a brute-force
// oracle before trusting it. Odd N is a precondition error.
SumIdentityResult check_even_sum_identity(std::size_t N);

} // namespace metallic
