#include "metallic/recurrence.hpp"

#include "metallic/error.hpp"

#include <utility>

namespace metallic {

RecurrenceSpec::RecurrenceSpec(std::vector<Rational> coefficients, std::vector<Rational> seeds)
    : coefficients_(std::move(coefficients)), seeds_(std::move(seeds)) {
    if (coefficients_.empty()) {
        throw PreconditionError("recurrence needs at least one coefficient");
    }
    if (seeds_.size() != coefficients_.size()) {
        throw PreconditionError("recurrence needs exactly one seed per coefficient");
    }
}

RecurrenceSpec RecurrenceSpec::metallic(Rational a, Rational b) {
    std::vector<Rational> seeds{Rational(1), a};
    return RecurrenceSpec({std::move(a), std::move(b)}, std::move(seeds));
}

RecurrenceSpec RecurrenceSpec::classic() {
    return metallic(Rational(1), Rational(1));
}

Rational term(const RecurrenceSpec& spec, std::size_t n) {
    const std::size_t k = spec.order();
    if (n < k) {
        return spec.seeds()[n];
    }
    // Sliding window of the last k terms; window[i % k] holds F_i.
    std::vector<Rational> window = spec.seeds();
    for (std::size_t i = k; i <= n; ++i) {
        Rational next(0);
        for (std::size_t j = 0; j < k; ++j) {
            next += spec.coefficients()[j] * window[(i - 1 - j) % k];
        }
        window[i % k] = std::move(next);
    }
    return window[n % k];
}

namespace {

// Dense k x k matrix of rationals, only as big as companion matrices get.
struct RationalMatrix {
    std::size_t size;
    std::vector<Rational> cells; // row-major

    Rational& at(std::size_t r, std::size_t c) { return cells[r * size + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells[r * size + c]; }

    static RationalMatrix identity(std::size_t k) {
        RationalMatrix m{k, std::vector<Rational>(k * k, Rational(0))};
        for (std::size_t i = 0; i < k; ++i) {
            m.at(i, i) = Rational(1);
        }
        return m;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        RationalMatrix r{size, std::vector<Rational>(size * size, Rational(0))};
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t l = 0; l < size; ++l) {
                if (at(i, l).is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < size; ++j) {
                    r.at(i, j) += at(i, l) * o.at(l, j);
                }
            }
        }
        return r;
    }
};

// First row is the coefficient vector, subdiagonal is ones: the matrix maps
// the state (F_m, ..., F_{m-k+1}) to (F_{m+1}, ..., F_{m-k+2}).
RationalMatrix companion(const RecurrenceSpec& spec) {
    const std::size_t k = spec.order();
    RationalMatrix m{k, std::vector<Rational>(k * k, Rational(0))};
    for (std::size_t j = 0; j < k; ++j) {
        m.at(0, j) = spec.coefficients()[j];
    }
    for (std::size_t i = 1; i < k; ++i) {
        m.at(i, i - 1) = Rational(1);
    }
    return m;
}

} // namespace

Rational term_fast(const RecurrenceSpec& spec, std::size_t n) {
    const std::size_t k = spec.order();
    if (n < k) {
        return spec.seeds()[n];
    }
    RationalMatrix result = RationalMatrix::identity(k);
    RationalMatrix base = companion(spec);
    std::size_t exponent = n - (k - 1);
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    // Top row of result applied to the initial state (F_{k-1}, ..., F_0).
    Rational value(0);
    for (std::size_t j = 0; j < k; ++j) {
        value += result.at(0, j) * spec.seeds()[k - 1 - j];
    }
    return value;
}

Rational ratio(const RecurrenceSpec& spec, std::size_t n) {
    if (n == 0) {
        throw PreconditionError("ratio needs n >= 1");
    }
    std::vector<Rational> pair = terms(spec, n);
    if (pair[n - 1].is_zero()) {
        throw DomainError("ratio undefined: F_" + std::to_string(n - 1) + " is zero");
    }
    return pair[n] / pair[n - 1];
}

std::vector<Rational> terms(const RecurrenceSpec& spec, std::size_t n_max) {
    const std::size_t k = spec.order();
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (std::size_t i = 0; i <= n_max && i < k; ++i) {
        out.push_back(spec.seeds()[i]);
    }
    for (std::size_t i = out.size(); i <= n_max; ++i) {
        Rational next(0);
        for (std::size_t j = 0; j < k; ++j) {
            next += spec.coefficients()[j] * out[i - 1 - j];
        }
        out.push_back(std::move(next));
    }
    return out;
}

namespace {

SumIdentityResult sum_identity(std::size_t N, bool evenCase) {
    std::vector<Rational> all = terms(RecurrenceSpec::classic(), N);
    SumIdentityResult result;
    result.lhs = all[N];
    result.rhs = Rational(0);
    // Odd N sums the even indices below N; even N additionally starts the odd
    // chain at F_1, i.e. F_0 + F_1 + F_3 + ... + F_{N-1}.
    result.addends.push_back(all[0]);
    result.rhs += all[0];
    for (std::size_t i = evenCase ? 1 : 2; i < N; i += 2) {
        result.addends.push_back(all[i]);
        result.rhs += all[i];
    }
    result.holds = result.lhs == result.rhs;
    return result;
}

} // namespace

SumIdentityResult check_odd_sum_identity(std::size_t N) {
    if (N % 2 == 0 || N < 1) {
        throw PreconditionError(
            "odd-sum identity needs odd N >= 1; for even N use check_even_sum_identity");
    }
    return sum_identity(N, /*evenCase=*/false);
}

SumIdentityResult check_even_sum_identity(std::size_t N) {
    if (N % 2 != 0 || N < 2) {
        throw PreconditionError(
            "even-sum identity needs even N >= 2; for odd N use check_odd_sum_identity");
    }
    return sum_identity(N, /*evenCase=*/true);
}

} // namespace metallic
