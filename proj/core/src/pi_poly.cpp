#include "recsum/pi_poly.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include <mpfr.h>

namespace recsum {

PiPoly PiPoly::monomial(const Rational& c, unsigned exponent) {
    PiPoly p;
    if (!c.is_zero()) p.terms_[exponent] = c;
    return p;
}

Rational PiPoly::coefficient(unsigned exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PiPoly::set(unsigned exponent, const Rational& c) {
    if (c.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

PiPoly PiPoly::operator-() const {
    PiPoly out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    for (const auto& [k, c] : o.terms_) set(k, coefficient(k) + c);
    return *this;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.set(ka + kb, out.coefficient(ka + kb) + ca * cb);
    return out;
}

PiPoly PiPoly::pow(unsigned e) const {
    PiPoly out(1);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
}

std::string PiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (k == 0)
            out += c.to_string();
        else if (k == 1)
            out += c.to_string() + " * pi";
        else
            out += c.to_string() + " * pi^" + std::to_string(k);
    }
    return out;
}

namespace {

// RAII wrapper so every exit path clears the mpfr state.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_t v;
};

mpfr_prec_t bits_for_digits(unsigned digits) {
    // digits+5 guard digits, converted to bits with slack.
    return static_cast<mpfr_prec_t>(std::ceil((digits + 10) * 3.3219280948873626)) + 16;
}

void eval_into(mpfr_t out, const std::map<unsigned, Rational>& terms, mpfr_prec_t prec) {
    Mpfr pi(prec), term(prec), power(prec);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    mpfr_set_zero(out, 1);
    for (const auto& [k, c] : terms) {
        mpfr_pow_ui(power.v, pi.v, k, MPFR_RNDN);
        mpfr_set_q(term.v, c.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term.v, term.v, power.v, MPFR_RNDN);
        mpfr_add(out, out, term.v, MPFR_RNDN);
    }
}

std::string format_significant(mpfr_t x, unsigned digits) {
    char small[128];
    const int needed = mpfr_snprintf(small, sizeof small, "%.*Rg", static_cast<int>(digits), x);
    if (needed < static_cast<int>(sizeof small)) return std::string(small);
    std::vector<char> big(static_cast<std::size_t>(needed) + 1);
    mpfr_snprintf(big.data(), big.size(), "%.*Rg", static_cast<int>(digits), x);
    return std::string(big.data());
}

} // namespace

std::string PiPoly::eval_numeric(unsigned digits) const {
    if (digits < 1) throw invalid_input_error("eval_numeric: digits must be >= 1");
    const mpfr_prec_t prec = bits_for_digits(digits);
    Mpfr acc(prec);
    eval_into(acc.v, terms_, prec);
    return format_significant(acc.v, digits);
}

double PiPoly::to_double() const {
    const mpfr_prec_t prec = bits_for_digits(25);
    Mpfr acc(prec);
    eval_into(acc.v, terms_, prec);
    return mpfr_get_d(acc.v, MPFR_RNDN);
}

std::string numeric_abs_error(const Rational& a, const PiPoly& b, unsigned digits) {
    if (digits < 1) throw invalid_input_error("numeric_abs_error: digits must be >= 1");
    const mpfr_prec_t prec = bits_for_digits(digits);
    Mpfr lhs(prec), rhs(prec);
    mpfr_set_q(lhs.v, a.raw().get_mpq_t(), MPFR_RNDN);
    eval_into(rhs.v, b.terms(), prec);
    mpfr_sub(lhs.v, lhs.v, rhs.v, MPFR_RNDN);
    mpfr_abs(lhs.v, lhs.v, MPFR_RNDN);
    return format_significant(lhs.v, digits);
}

std::ostream& operator<<(std::ostream& os, const PiPoly& p) {
    return os << p.to_string();
}

} // namespace recsum
