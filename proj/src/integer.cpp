#include "metallic/integer.hpp"

#include "metallic/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace metallic {

namespace {

std::uint32_t parse_limb(std::string_view digits) {
    std::uint32_t value = 0;
    for (char c : digits) {
        value = value * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return value;
}

} // namespace

Integer::Integer(long long value) {
    if (value == 0) {
        return;
    }
    sign_ = value < 0 ? -1 : 1;
    // Avoids overflow at LLONG_MIN.
    unsigned long long mag = value < 0 ? 0ULL - static_cast<unsigned long long>(value)
                                       : static_cast<unsigned long long>(value);
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag % kBase));
        mag /= kBase;
    }
}

Integer::Integer(int sign, Magnitude mag) : sign_(sign), mag_(std::move(mag)) {
    trim(mag_);
    if (mag_.empty()) {
        sign_ = 0;
    }
}

Integer Integer::from_string(std::string_view text) {
    std::string_view body = text;
    int sign = 1;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        if (body.front() == '-') {
            sign = -1;
        }
        body.remove_prefix(1);
    }
    if (body.empty()) {
        throw PreconditionError("invalid integer literal '" + std::string(text) + "'");
    }
    for (char c : body) {
        if (c < '0' || c > '9') {
            throw PreconditionError("invalid integer literal '" + std::string(text) + "'");
        }
    }
    Magnitude mag;
    mag.reserve(body.size() / kBaseDigits + 1);
    std::size_t pos = body.size();
    while (pos > 0) {
        std::size_t chunk = pos >= static_cast<std::size_t>(kBaseDigits) ? kBaseDigits : pos;
        mag.push_back(parse_limb(body.substr(pos - chunk, chunk)));
        pos -= chunk;
    }
    return Integer(sign, std::move(mag));
}

Integer Integer::pow10(std::size_t exponent) {
    return Integer(1).mul_pow10(exponent);
}

Integer Integer::abs() const {
    Integer r = *this;
    if (r.sign_ < 0) {
        r.sign_ = 1;
    }
    return r;
}

Integer Integer::operator-() const {
    Integer r = *this;
    r.sign_ = -r.sign_;
    return r;
}

void Integer::trim(Magnitude& m) {
    while (!m.empty() && m.back() == 0) {
        m.pop_back();
    }
}

int Integer::compare_mag(const Magnitude& a, const Magnitude& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

Integer::Magnitude Integer::add_mag(const Magnitude& a, const Magnitude& b) {
    const Magnitude& lo = a.size() < b.size() ? a : b;
    const Magnitude& hi = a.size() < b.size() ? b : a;
    Magnitude r;
    r.reserve(hi.size() + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint32_t sum = hi[i] + carry;
        if (i < lo.size()) {
            sum += lo[i];
        }
        if (sum >= kBase) {
            sum -= kBase;
            carry = 1;
        } else {
            carry = 0;
        }
        r.push_back(sum);
    }
    if (carry != 0) {
        r.push_back(carry);
    }
    return r;
}

Integer::Magnitude Integer::sub_mag(const Magnitude& a, const Magnitude& b) {
    Magnitude r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(diff));
    }
    trim(r);
    return r;
}

Integer::Magnitude Integer::mul_mag(const Magnitude& a, const Magnitude& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Magnitude r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    trim(r);
    return r;
}

Integer::Magnitude Integer::mul_small(const Magnitude& a, std::uint32_t s) {
    if (a.empty() || s == 0) {
        return {};
    }
    Magnitude r;
    r.reserve(a.size() + 1);
    std::uint64_t carry = 0;
    for (std::uint32_t limb : a) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * s + carry;
        r.push_back(static_cast<std::uint32_t>(cur % kBase));
        carry = cur / kBase;
    }
    while (carry != 0) {
        r.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return r;
}

// Knuth-style schoolbook long division in base 10^9.
std::pair<Integer::Magnitude, Integer::Magnitude>
Integer::divmod_mag(const Magnitude& u, const Magnitude& v) {
    const std::uint64_t B = kBase;

    if (compare_mag(u, v) < 0) {
        return {Magnitude{}, u};
    }
    if (v.size() == 1) {
        Magnitude q(u.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = rem * B + u[i];
            q[i] = static_cast<std::uint32_t>(cur / v[0]);
            rem = cur % v[0];
        }
        trim(q);
        Magnitude r;
        if (rem != 0) {
            r.push_back(static_cast<std::uint32_t>(rem));
        }
        return {std::move(q), std::move(r)};
    }

    const std::size_t n = v.size();
    const std::size_t m = u.size();

    // Normalize so the divisor's top limb is at least B/2; the quotient-digit
    // estimate below is then off by at most 2. d = B/(v_top+1) keeps the
    // divisor at n limbs.
    const std::uint32_t d = static_cast<std::uint32_t>(B / (v.back() + 1));
    Magnitude un = d == 1 ? u : mul_small(u, d);
    Magnitude vn = d == 1 ? v : mul_small(v, d);
    un.resize(m + 1, 0);

    Magnitude q(m - n + 1, 0);
    for (std::size_t j = m - n + 1; j-- > 0;) {
        std::uint64_t top = static_cast<std::uint64_t>(un[j + n]) * B + un[j + n - 1];
        std::uint64_t qhat = top / vn[n - 1];
        std::uint64_t rhat = top % vn[n - 1];
        while (qhat >= B ||
               qhat * vn[n - 2] > rhat * B + un[j + n - 2]) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= B) {
                break;
            }
        }

        // Multiply-and-subtract qhat * vn from un[j .. j+n].
        std::uint64_t carry = 0;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p / B;
            std::int64_t diff = static_cast<std::int64_t>(un[i + j]) -
                                static_cast<std::int64_t>(p % B) - borrow;
            if (diff < 0) {
                diff += static_cast<std::int64_t>(B);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t topDiff = static_cast<std::int64_t>(un[j + n]) -
                               static_cast<std::int64_t>(carry) - borrow;

        if (topDiff < 0) {
            // qhat was one too large; add the divisor back once.
            --qhat;
            std::uint32_t addCarry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t sum = un[i + j] + vn[i] + addCarry;
                if (sum >= kBase) {
                    sum -= kBase;
                    addCarry = 1;
                } else {
                    addCarry = 0;
                }
                un[i + j] = sum;
            }
            topDiff += addCarry;
        }
        un[j + n] = static_cast<std::uint32_t>(topDiff);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    trim(q);
    un.resize(n);
    trim(un);

    if (d != 1 && !un.empty()) {
        // Denormalize the remainder (exact by construction).
        Magnitude r(un.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = un.size(); i-- > 0;) {
            std::uint64_t cur = rem * B + un[i];
            r[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(r);
        return {std::move(q), std::move(r)};
    }
    return {std::move(q), std::move(un)};
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (rhs.sign_ == 0) {
        return *this;
    }
    if (sign_ == 0) {
        *this = rhs;
        return *this;
    }
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    int cmp = compare_mag(mag_, rhs.mag_);
    if (cmp == 0) {
        *this = Integer();
    } else if (cmp > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    return *this += -rhs;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        *this = Integer();
        return *this;
    }
    mag_ = mul_mag(mag_, rhs.mag_);
    sign_ *= rhs.sign_;
    return *this;
}

std::pair<Integer, Integer> Integer::divmod(const Integer& dividend, const Integer& divisor) {
    if (divisor.sign_ == 0) {
        throw DomainError("division by zero");
    }
    if (dividend.sign_ == 0) {
        return {Integer(), Integer()};
    }
    auto [qm, rm] = divmod_mag(dividend.mag_, divisor.mag_);
    Integer q(dividend.sign_ * divisor.sign_, std::move(qm));
    Integer r(dividend.sign_, std::move(rm));
    return {std::move(q), std::move(r)};
}

Integer& Integer::operator/=(const Integer& rhs) {
    *this = divmod(*this, rhs).first;
    return *this;
}

Integer& Integer::operator%=(const Integer& rhs) {
    *this = divmod(*this, rhs).second;
    return *this;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
    Integer x = a.abs();
    Integer y = b.abs();
    while (!y.is_zero()) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Integer Integer::mul_pow10(std::size_t k) const {
    if (sign_ == 0) {
        return Integer();
    }
    Integer r = *this;
    std::size_t limbShift = k / kBaseDigits;
    std::uint32_t rest = 1;
    for (std::size_t i = 0; i < k % kBaseDigits; ++i) {
        rest *= 10;
    }
    if (limbShift > 0) {
        r.mag_.insert(r.mag_.begin(), limbShift, 0);
    }
    if (rest != 1) {
        r.mag_ = mul_small(r.mag_, rest);
    }
    return r;
}

bool Integer::operator==(const Integer& rhs) const {
    return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

std::strong_ordering Integer::operator<=>(const Integer& rhs) const {
    if (sign_ != rhs.sign_) {
        return sign_ <=> rhs.sign_;
    }
    int cmp = compare_mag(mag_, rhs.mag_);
    if (sign_ < 0) {
        cmp = -cmp;
    }
    return cmp <=> 0;
}

std::string Integer::to_string() const {
    if (sign_ == 0) {
        return "0";
    }
    std::string out;
    out.reserve(mag_.size() * kBaseDigits + 1);
    if (sign_ < 0) {
        out.push_back('-');
    }
    out += std::to_string(mag_.back());
    for (std::size_t i = mag_.size() - 1; i-- > 0;) {
        std::string limb = std::to_string(mag_[i]);
        out.append(kBaseDigits - limb.size(), '0');
        out += limb;
    }
    return out;
}

std::size_t Integer::digit_count() const {
    if (sign_ == 0) {
        return 1;
    }
    std::size_t top = 0;
    for (std::uint32_t v = mag_.back(); v != 0; v /= 10) {
        ++top;
    }
    return top + (mag_.size() - 1) * kBaseDigits;
}

Integer isqrt(const Integer& n) {
    if (n.is_negative()) {
        throw DomainError("isqrt of negative value");
    }
    if (n.is_zero()) {
        return Integer();
    }
    const Integer one(1);
    if (n.mag_.size() == 1 && n.mag_[0] < 4) {
        return one; // 1, 2, 3
    }
    // Initial guess 10^ceil(d/2) >= sqrt(n); Newton steps from above are
    // monotone decreasing, so the first non-decrease is the floor root.
    Integer x = Integer::pow10((n.digit_count() + 1) / 2);
    const Integer two(2);
    while (true) {
        Integer y = (x + n / x) / two;
        if (y >= x) {
            return x;
        }
        x = std::move(y);
    }
}

} // namespace metallic
