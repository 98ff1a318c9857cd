#include "emblat/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace emblat {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Bigint::Bigint(std::int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // avoid UB on INT64_MIN
    std::uint64_t u = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1;
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

void Bigint::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int Bigint::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> Bigint::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& sml = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r;
    r.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < sml.size() ? sml[i] : 0u);
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> Bigint::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> Bigint::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Bigint Bigint::operator-() const {
    Bigint r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Bigint Bigint::abs() const {
    Bigint r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

Bigint& Bigint::operator+=(const Bigint& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

Bigint& Bigint::operator-=(const Bigint& o) { return *this += -o; }

Bigint& Bigint::operator*=(const Bigint& o) {
    sign_ *= o.sign_;
    mag_ = mul_mag(mag_, o.mag_);
    if (mag_.empty()) sign_ = 0;
    return *this;
}

int Bigint::compare(const Bigint& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

// Knuth algorithm D on 32-bit limbs.
Bigint::DivMod Bigint::divmod(const Bigint& a, const Bigint& b) {
    if (b.sign_ == 0) throw std::domain_error("Bigint: division by zero");
    DivMod out;
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
        out.rem = a;
        return out;
    }
    if (b.mag_.size() == 1) {
        std::uint64_t d = b.mag_[0];
        std::vector<std::uint32_t> q(a.mag_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.mag_[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        out.quot.mag_ = std::move(q);
        out.quot.sign_ = a.sign_ * b.sign_;
        out.quot.trim();
        if (rem != 0) {
            out.rem = Bigint(static_cast<std::int64_t>(rem));
            out.rem.sign_ = a.sign_;
        }
        return out;
    }

    // normalize so the top limb of the divisor has its high bit set
    int shift = 0;
    std::uint32_t top = b.mag_.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> r(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            r[i] |= shift ? (v[i] << shift) : v[i];
            if (shift) r[i + 1] = v[i] >> (32 - shift);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    std::vector<std::uint32_t> u = shl(a.mag_);
    std::vector<std::uint32_t> v = shl(b.mag_);
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    u.resize(u.size() + 1, 0);
    std::vector<std::uint32_t> q(m + 1, 0);

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add the divisor back
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= 0xffffffff;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    out.quot.mag_ = std::move(q);
    out.quot.sign_ = a.sign_ * b.sign_;
    out.quot.trim();
    // denormalize the remainder
    std::vector<std::uint32_t> r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = shift ? ((u[i] >> shift) | (static_cast<std::uint64_t>(u[i + 1]) << (32 - shift)))
                     : u[i];
    }
    out.rem.mag_ = std::move(r);
    out.rem.sign_ = a.sign_;
    out.rem.trim();
    return out;
}

Bigint Bigint::div_exact(const Bigint& a, const Bigint& b) {
    DivMod dm = divmod(a, b);
    if (!dm.rem.is_zero()) throw std::logic_error("Bigint: inexact division");
    return dm.quot;
}

Bigint Bigint::gcd(Bigint a, Bigint b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        Bigint r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Bigint Bigint::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Bigint: empty string");
    int sign = 1;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("Bigint: no digits");
    Bigint r;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("Bigint: bad digit '" + std::string(1, ch) + "'");
        r *= Bigint(10);
        r += Bigint(ch - '0');
    }
    if (sign < 0) r.sign_ = -r.sign_;
    return r;
}

std::string Bigint::str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide by 10^9 in place
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double Bigint::to_double() const {
    double r = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

bool Bigint::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    return u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
}

std::int64_t Bigint::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Bigint: does not fit int64");
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u |= mag_[0];
    if (mag_.size() >= 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    // negate in the unsigned domain so INT64_MIN round-trips
    return static_cast<std::int64_t>(sign_ < 0 ? ~u + 1 : u);
}

Bigint Bigint::factorial(unsigned n) {
    Bigint r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Bigint(i);
    return r;
}

Bigint Bigint::binomial(unsigned n, unsigned k) {
    if (k > n) return Bigint(0);
    if (k > n - k) k = n - k;
    Bigint r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r *= Bigint(n - k + i);
        r = div_exact(r, Bigint(i));
    }
    return r;
}

Bigint Bigint::pow2(unsigned k) {
    Bigint r;
    r.sign_ = 1;
    r.mag_.assign(k / 32 + 1, 0);
    r.mag_.back() = 1u << (k % 32);
    return r;
}

Bigint Bigint::ipow(const Bigint& base, unsigned e) {
    Bigint r(1);
    Bigint b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace emblat
