#include "metallic/expansions.hpp"

#include "metallic/error.hpp"
#include "metallic/roots.hpp"

#include <utility>

namespace metallic {

namespace {

// Levels v_0 = a, v_{j+1} = a + b/v_j do not depend on the total depth, so
// tables can extend a single running value.
Rational cf_extend(const ContinuedFractionSpec& spec, const Rational& level,
                   std::size_t levelIndex) {
    if (level.is_zero()) {
        throw DomainError("zero denominator at continued-fraction level " +
                          std::to_string(levelIndex));
    }
    return spec.a + spec.b / level;
}

void finish_report(ConvergenceReport& report) {
    // Smallest suffix start from which the error column never increases. The
    // column is judged at the report's precision: against the truncated
    // target, exact errors oscillate at sub-ulp scale once the values get
    // that close, which is invisible in the table itself.
    std::size_t monotoneFrom = 0;
    const ConvergenceRow* previous = nullptr;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        if (!report.rows[i].defined) {
            continue;
        }
        if (previous != nullptr &&
            report.rows[i].error.mantissa() > previous->error.mantissa()) {
            monotoneFrom = i;
        }
        previous = &report.rows[i];
    }
    std::size_t last = report.rows.size() == 0 ? 0 : report.rows.size() - 1;
    report.error_eventually_decreasing = monotoneFrom < last || report.rows.size() < 2;
}

void push_value_row(ConvergenceReport& report, std::size_t index, Rational value) {
    ConvergenceRow row;
    row.index = index;
    row.value = std::move(value);
    row.decimal = fixed_from_rational(row.value, report.digits).to_string();
    row.error_exact = (row.value - report.target.to_rational()).abs();
    row.error = fixed_from_rational(row.error_exact, report.digits);
    report.rows.push_back(std::move(row));
}

} // namespace

Rational cf_convergent(const ContinuedFractionSpec& spec) {
    Rational value = spec.a;
    for (std::size_t level = 0; level < spec.depth; ++level) {
        value = cf_extend(spec, value, level);
    }
    return value;
}

CfRatioCheckResult cf_equals_ratio(const ContinuedFractionSpec& cf,
                                   const RecurrenceSpec& sequence) {
    RecurrenceSpec expected = RecurrenceSpec::metallic(cf.a, cf.b);
    if (sequence.coefficients() != expected.coefficients() ||
        sequence.seeds() != expected.seeds()) {
        throw PreconditionError(
            "cf_equals_ratio needs the standard-seed recurrence for the fraction's (a, b)");
    }
    CfRatioCheckResult result;
    result.convergent = cf_convergent(cf);
    result.ratio = ratio(sequence, cf.depth + 1);
    result.holds = result.convergent == result.ratio;
    return result;
}

CfRatioCheckResult cf_equals_ratio(const ContinuedFractionSpec& cf) {
    return cf_equals_ratio(cf, RecurrenceSpec::metallic(cf.a, cf.b));
}

RadicalIteration::RadicalIteration(Rational a, Rational b, std::size_t digits)
    : a_(std::move(a)), b_(std::move(b)), digits_(digits) {
    if (a_.is_negative() || b_.is_negative()) {
        throw PreconditionError("nested radical needs a >= 0 and b >= 0");
    }
    if (a_.is_zero() && b_.is_zero()) {
        throw PreconditionError("nested radical needs a and b not both zero");
    }
    iterate_ = sqrt_fixed(b_, digits_);
}

void RadicalIteration::advance() {
    iterate_ = sqrt_fixed(b_ + a_ * iterate_.to_rational(), digits_);
    ++step_;
}

FixedReal radical_iterate(const Rational& a, const Rational& b, std::size_t steps,
                          std::size_t digits) {
    RadicalIteration iteration(a, b, digits);
    while (iteration.step() < steps) {
        iteration.advance();
    }
    return iteration.iterate();
}

RadicalConvergence radical_converged(const Rational& a, const Rational& b,
                                     std::size_t digits) {
    RadicalIteration iteration(a, b, digits);
    if (a.is_zero()) {
        // No nesting remains: the radical is just sqrt(b).
        return {iteration.iterate(), 1};
    }
    const FixedReal target = phi(a, b, digits);
    const std::size_t cap = 10 + 4 * digits;
    FixedReal previous = iteration.iterate();
    while (iteration.step() < cap) {
        FixedReal before = iteration.iterate();
        iteration.advance();
        if (iteration.iterate().within_ulps(before, 2) &&
            iteration.iterate().within_ulps(target, 4)) {
            // Steps count square-root evaluations, seed included.
            return {iteration.iterate(), iteration.step() + 1};
        }
        previous = std::move(before);
    }
    throw ConvergenceError("nested radical did not stabilize within " +
                               std::to_string(cap) + " steps",
                           iteration.iterate(), previous);
}

ConvergenceReport ratio_convergence_table(const RecurrenceSpec& spec, std::size_t n_max,
                                          std::size_t digits) {
    if (spec.order() != 2) {
        throw PreconditionError("ratio table needs a two-term recurrence");
    }
    if (n_max < 1) {
        throw PreconditionError("ratio table needs n_max >= 1");
    }
    const Rational& a = spec.coefficients()[0];
    const Rational& b = spec.coefficients()[1];
    Rational disc = a * a + Rational(4) * b;
    if (!(disc > Rational(0))) {
        throw PreconditionError("ratio table needs a positive discriminant");
    }

    ConvergenceReport report;
    report.digits = digits;
    report.target = phi(a, b, digits);
    // |plus| > |minus| iff their sum a is positive (they never coincide here).
    report.dominance_guaranteed = a > Rational(0);

    std::vector<Rational> all = terms(spec, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (all[n - 1].is_zero()) {
            ConvergenceRow row;
            row.index = n;
            row.defined = false;
            row.error = FixedReal(Integer(0), digits);
            report.rows.push_back(std::move(row));
            continue;
        }
        push_value_row(report, n, all[n] / all[n - 1]);
    }
    finish_report(report);
    return report;
}

ConvergenceReport cf_convergence_table(const Rational& a, const Rational& b,
                                       std::size_t max_depth, std::size_t digits) {
    Rational disc = a * a + Rational(4) * b;
    if (!(disc > Rational(0))) {
        throw PreconditionError("cf table needs a positive discriminant");
    }

    ConvergenceReport report;
    report.digits = digits;
    report.target = phi(a, b, digits);
    report.dominance_guaranteed = a > Rational(0);

    ContinuedFractionSpec spec{a, b, 0};
    Rational value = a;
    for (std::size_t depth = 0; depth <= max_depth; ++depth) {
        if (depth > 0) {
            value = cf_extend(spec, value, depth - 1);
        }
        push_value_row(report, depth, value);
    }
    finish_report(report);
    return report;
}

} // namespace metallic
