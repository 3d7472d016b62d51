#include "recsum/rational.hpp"

#include <cctype>
#include <ostream>

namespace recsum {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw invalid_input_error("rational: cannot parse '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw invalid_input_error("rational: cannot parse '" + text + "'");
    return Rational(Integer(num), Integer(den));
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_fraction_string() const {
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::pow(unsigned long e) const {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(out.get_num(), out.get_den());
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw invalid_input_error("rational: reciprocal of zero");
    return Rational(den(), num());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(const Integer& n, unsigned long k) {
    if (n >= 0 && n < static_cast<long>(k)) return 0;
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

} // namespace recsum
