#pragma once

#include <map>
#include <string>

#include "recsum/rational.hpp"

namespace recsum {

/// Finite formal sum of rational multiples of powers of pi. Pi is treated as
/// a formal transcendental: two values are equal iff their coefficient maps
/// are identical, and nothing is ever coerced to floating point unless
/// eval_numeric is called explicitly.
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) terms_[0] = constant;
    }
    PiPoly(long constant) : PiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    /// c * pi^k as a single-term value.
    static PiPoly monomial(const Rational& c, unsigned exponent);

    const std::map<unsigned, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Number of stored (necessarily nonzero) terms.
    std::size_t term_count() const { return terms_.size(); }
    /// Coefficient of pi^k (zero when absent).
    Rational coefficient(unsigned exponent) const;

    PiPoly operator-() const;
    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o) { return *this += -o; }
    PiPoly& operator*=(const PiPoly& o) { *this = *this * o; return *this; }

    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);

    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.terms_ == b.terms_; }

    PiPoly pow(unsigned e) const;

    /// `0`, `1/2`, `1/6 * pi^2`, `1/2 + 7/360 * pi^4`.
    std::string to_string() const;

    /// Decimal value correct to `digits` significant digits (digits >= 1).
    /// Internally evaluates with at least digits+5 guard digits.
    std::string eval_numeric(unsigned digits) const;

    /// Convenience double approximation (evaluated well beyond double
    /// precision first, then rounded once).
    double to_double() const;

private:
    void set(unsigned exponent, const Rational& c);

    std::map<unsigned, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const PiPoly& p);

/// |numeric(a) - numeric(b)| as a decimal string with `digits` significant
/// digits, where `a` is exact rational and `b` a pi-polynomial.
std::string numeric_abs_error(const Rational& a, const PiPoly& b, unsigned digits);

} // namespace recsum
