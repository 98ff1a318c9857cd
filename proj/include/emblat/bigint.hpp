#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace emblat {

// Signed arbitrary-precision integer, sign + magnitude in base 2^32.
// Counts in this library (Stirling numbers, chain counts, Moebius values)
// overflow fixed-width types quickly, so everything countable is a Bigint.
class Bigint {
public:
    Bigint() = default;
    Bigint(std::int64_t v);

    static Bigint from_string(std::string_view s);
    static Bigint factorial(unsigned n);
    static Bigint binomial(unsigned n, unsigned k);
    static Bigint pow2(unsigned k);
    // base^e by repeated squaring
    static Bigint ipow(const Bigint& base, unsigned e);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    Bigint operator-() const;
    Bigint abs() const;

    Bigint& operator+=(const Bigint& o);
    Bigint& operator-=(const Bigint& o);
    Bigint& operator*=(const Bigint& o);

    friend Bigint operator+(Bigint a, const Bigint& b) { return a += b; }
    friend Bigint operator-(Bigint a, const Bigint& b) { return a -= b; }
    friend Bigint operator*(Bigint a, const Bigint& b) { return a *= b; }

    // Truncated division (quotient rounds toward zero, remainder has the
    // sign of the dividend). Throws std::domain_error on division by zero.
    struct DivMod;
    static DivMod divmod(const Bigint& a, const Bigint& b);
    friend Bigint operator/(const Bigint& a, const Bigint& b);
    friend Bigint operator%(const Bigint& a, const Bigint& b);

    // Exact division: throws std::logic_error if b does not divide a.
    static Bigint div_exact(const Bigint& a, const Bigint& b);

    static Bigint gcd(Bigint a, Bigint b);

    int compare(const Bigint& o) const;
    friend bool operator==(const Bigint& a, const Bigint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Bigint& a, const Bigint& b) { return a.compare(b) != 0; }
    friend bool operator<(const Bigint& a, const Bigint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Bigint& a, const Bigint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Bigint& a, const Bigint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Bigint& a, const Bigint& b) { return a.compare(b) >= 0; }

    std::string str() const;
    double to_double() const;
    // Value as int64 if it fits, otherwise throws std::overflow_error.
    std::int64_t to_int64() const;
    bool fits_int64() const;

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

struct Bigint::DivMod {
    Bigint quot;
    Bigint rem;
};

inline Bigint operator/(const Bigint& a, const Bigint& b) { return Bigint::divmod(a, b).quot; }
inline Bigint operator%(const Bigint& a, const Bigint& b) { return Bigint::divmod(a, b).rem; }

}  // namespace emblat
