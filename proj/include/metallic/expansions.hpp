#pragma once

#include "metallic/fixed_real.hpp"
#include "metallic/rational.hpp"
#include "metallic/recurrence.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace metallic {

// Periodic generalized continued fraction a + b/(a + b/(a + ...)) truncated
// after `depth` partial fractions; depth 0 is the bare leading a.
struct ContinuedFractionSpec {
    Rational a;
    Rational b;
    std::size_t depth = 0;
};

// Exact value of the finite continued fraction, evaluated bottom-up. Throws
// DomainError naming the level whose value is zero when a division by zero
// would occur (possible for b < 0).
Rational cf_convergent(const ContinuedFractionSpec& spec);

struct CfRatioCheckResult {
    bool holds;
    Rational convergent; // depth-d continued fraction
    Rational ratio;      // F_{d+1}/F_d of the standard-seed recurrence
};

// Exact rational equality cf_convergent(a, b, d) = F_{d+1}(a,b) / F_d(a,b)
// with standard seeds [1, a]. The sequence spec must match the fraction's
// (a, b) and seeds, else PreconditionError.
CfRatioCheckResult cf_equals_ratio(const ContinuedFractionSpec& cf,
                                   const RecurrenceSpec& sequence);
CfRatioCheckResult cf_equals_ratio(const ContinuedFractionSpec& cf);

// Walks the truncated nested radical: the iterate starts at x_0 = sqrt(b)
// and each advance applies x -> sqrt(b + a*x), every square root floored at
// `digits` decimals. The iterate is nonnegative at every step and the step
// count rises by exactly one per advance. Requires a >= 0, b >= 0, not both
// zero.
class RadicalIteration {
public:
    RadicalIteration(Rational a, Rational b, std::size_t digits);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const FixedReal& iterate() const { return iterate_; }
    std::size_t step() const { return step_; }
    std::size_t digits() const { return digits_; }

    void advance();

private:
    Rational a_;
    Rational b_;
    FixedReal iterate_;
    std::size_t step_ = 0;
    std::size_t digits_;
};

// The iterate after `steps` advances: the depth-`steps` truncation of the
// infinite radical.
FixedReal radical_iterate(const Rational& a, const Rational& b, std::size_t steps,
                          std::size_t digits);

// The radical iteration stopped before reaching the fixed point.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& message, FixedReal last, FixedReal previous)
        : std::runtime_error(message), last_(std::move(last)),
          previous_(std::move(previous)) {}

    const FixedReal& last() const { return last_; }
    const FixedReal& previous() const { return previous_; }

private:
    FixedReal last_;
    FixedReal previous_;
};

struct RadicalConvergence {
    FixedReal value;
    std::size_t steps; // square-root evaluations, counting the seed sqrt(b)
};

// Iterates x -> sqrt(b + a*x) until two successive iterates differ by at most
// 2 ulp and the iterate lies within 4 ulp of phi(a, b); the cross-check guards
// against stalling when the contraction factor a/(2*phi) is close to 1. The
// step cap is 10 + 4*digits; hitting it raises ConvergenceError carrying the
// last two iterates. a = 0 needs no nesting and returns after the seed.
RadicalConvergence radical_converged(const Rational& a, const Rational& b,
                                     std::size_t digits);

struct ConvergenceRow {
    std::size_t index = 0;
    bool defined = true;    // false when a zero predecessor term made the
                            // ratio undefined; value/error fields are empty
    Rational value;         // exact ratio or convergent
    std::string decimal;    // value truncated to the report's digits
    Rational error_exact;   // |value - target| as an exact rational
    FixedReal error;        // error_exact truncated to the report's digits
};

// Per-step table of values and absolute errors against phi(a, b).
struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    FixedReal target;
    std::size_t digits = 0;
    // The plus root strictly dominates (a > 0 with positive discriminant), so
    // convergence is a theorem rather than an observation.
    bool dominance_guaranteed = false;
    // True when the error column is non-increasing from some row onward.
    bool error_eventually_decreasing = false;
};

// Ratios F_n/F_{n-1} for n = 1..n_max of a two-term recurrence, with errors
// against phi(a, b). Requires n_max >= 1 and a positive discriminant. Rows
// with a zero predecessor are marked undefined and the table continues.
ConvergenceReport ratio_convergence_table(const RecurrenceSpec& spec, std::size_t n_max,
                                          std::size_t digits);

// Convergents of depth 0..max_depth with errors against phi(a, b). A division
// by zero inside a convergent propagates as DomainError.
ConvergenceReport cf_convergence_table(const Rational& a, const Rational& b,
                                       std::size_t max_depth, std::size_t digits);

} // namespace metallic
