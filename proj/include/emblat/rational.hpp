#pragma once

#include <string>
#include <string_view>

#include "emblat/bigint.hpp"

namespace emblat {

// Exact rational number, always reduced, denominator > 0.
// Game values and Moebius masses are sign-critical (margins like -2/25),
// so no floating point enters any verdict.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(Bigint num) : num_(std::move(num)), den_(1) {}
    Rational(Bigint num, Bigint den);
    Rational(std::int64_t num, std::int64_t den) : Rational(Bigint(num), Bigint(den)) {}

    // Parses "p", "-p", or "p/q".
    static Rational parse(std::string_view s);

    const Bigint& num() const { return num_; }
    const Bigint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == Bigint(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    int compare(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.compare(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    double to_double() const;

private:
    Bigint num_;
    Bigint den_;

    void normalize();
};

}  // namespace emblat
