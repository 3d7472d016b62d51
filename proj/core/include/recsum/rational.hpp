#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "recsum/errors.hpp"

namespace recsum {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always stored canonically reduced with a
/// positive denominator, so equality is structural. The sign lives in the
/// numerator. Backed by GMP.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}              // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}    // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den) : value_(num, den) {
        if (den == 0) throw invalid_input_error("rational: zero denominator");
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses `-3/2` or the integer shorthand `7`.
    static Rational parse(const std::string& text);

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_negative() const { return value_ < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// `7`, `-3/2` (denominator omitted when it is 1).
    std::string to_string() const;
    /// `7/1`, `-3/2` (denominator always present; the JSON wire form).
    std::string to_fraction_string() const;

    double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw invalid_input_error("rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational pow(unsigned long e) const;
    Rational reciprocal() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an Integer.
Integer factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(const Integer& n, unsigned long k);

} // namespace recsum
