#include "recsum/zeta.hpp"

#include <cmath>

#include "recsum/special.hpp"

namespace recsum {

namespace {

Integer two_pow(unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

} // namespace

Rational faulhaber_sum(long n, int p) {
    if (n < 0) throw invalid_input_error("faulhaber_sum: n must be non-negative");
    if (p < 0) throw invalid_input_error("faulhaber_sum: p must be non-negative");
    Rational sum(0);
    const Integer nz(n);
    for (int j = 0; j <= p; ++j) {
        Integer npow;
        mpz_pow_ui(npow.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(p + 1 - j));
        Rational term = Rational(binomial(Integer(p + 1), static_cast<unsigned long>(j))) *
                        bernoulli(j) * Rational(npow);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum / Rational(p + 1);
}

Rational recurrent_faulhaber(int m, int p, long n) {
    if (m < 1) throw invalid_input_error("recurrent_faulhaber: m must be positive");
    if (p < 0) throw invalid_input_error("recurrent_faulhaber: p must be non-negative");
    std::vector<Rational> power_sums;
    power_sums.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) power_sums.push_back(faulhaber_sum(n, i * p));
    return reduced_from_power_sums(m, power_sums);
}

PiPoly zeta_even(int m) {
    if (m < 1) throw invalid_input_error("zeta_even: m must be positive");
    Rational coeff = Rational(two_pow(2 * static_cast<unsigned long>(m) - 1)) * bernoulli(2 * m) /
                     Rational(factorial(2 * static_cast<unsigned long>(m)));
    if (m % 2 == 0) coeff = -coeff;
    return PiPoly::monomial(coeff, 2 * static_cast<unsigned>(m));
}

PiPoly recurrent_zeta_star_even(int m, int p) {
    if (m < 1 || p < 1)
        throw invalid_input_error("recurrent_zeta_star_even: m, p must be positive");
    std::vector<PiPoly> power_sums;
    power_sums.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) power_sums.push_back(zeta_even(i * p));
    return reduced_from_power_sums(m, power_sums);
}

namespace {

/// sum over partitions of m of prod_i ((-1)^{y_i}/y_i!)
/// (B_{2ip}/((2i)(2ip)!))^{y_i}.
Rational bernoulli_partition_sum(int m, int p) {
    Rational sum(0);
    for (const auto& part : enumerate_partitions(m)) {
        Rational term(1);
        for (int i = 1; i <= m; ++i) {
            const unsigned y = part.multiplicity(i);
            if (y == 0) continue;
            const Integer denom = Integer(2 * i) * factorial(2 * static_cast<unsigned long>(i * p));
            const Rational base = bernoulli(2 * i * p) / Rational(denom);
            term *= base.pow(y) / Rational(factorial(y));
            if (y % 2 == 1) term = -term;
        }
        sum += term;
    }
    return sum;
}

} // namespace

PiPoly recurrent_zeta_star_even_bernoulli_form(int m, int p) {
    if (m < 1 || p < 1)
        throw invalid_input_error("recurrent_zeta_star_even_bernoulli_form: m, p must be positive");
    Rational coeff = Rational(two_pow(2 * static_cast<unsigned long>(m) * p)) *
                     bernoulli_partition_sum(m, p);
    if ((static_cast<long>(p) * m) % 2 == 1) coeff = -coeff;
    return PiPoly::monomial(coeff, 2 * static_cast<unsigned>(m * p));
}

PiPoly basel_general(int m) {
    if (m < 1) throw invalid_input_error("basel_general: m must be positive");
    const Rational factor = Rational(2) - Rational(Integer(1), two_pow(2 * (static_cast<unsigned long>(m) - 1)));
    return PiPoly(factor) * zeta_even(m);
}

bool bernoulli_partition_identity(int m, int p) {
    if (m < 1 || p < 1)
        throw invalid_input_error("bernoulli_partition_identity: m, p must be positive");
    const Rational lhs = bernoulli_partition_sum(m, p);
    const Rational rhs = (Rational(Integer(1), two_pow(2 * static_cast<unsigned long>(m) - 1)) -
                          Rational(1)) *
                         bernoulli(2 * m) / Rational(factorial(2 * static_cast<unsigned long>(m)));
    return lhs == rhs;
}

TruncationReport truncated_zeta_star(int m, int p, long n, unsigned digits) {
    if (m < 1 || p < 1)
        throw invalid_input_error("truncated_zeta_star: m, p must be positive");
    if (n < 1) throw invalid_input_error("truncated_zeta_star: n must be positive");
    TruncationReport report;
    report.n = n;
    report.partial =
        eval_naive(RecurrentSumSpec::same(m, 1, n, SeqSpec::power(-2L * p)));
    report.target = recurrent_zeta_star_even(m, p);
    report.abs_error = numeric_abs_error(report.partial, report.target, digits);
    return report;
}

std::vector<BaselRow> basel_limit_table(int max_m) {
    if (max_m < 1) throw invalid_input_error("basel_limit_table: max_m must be positive");
    std::vector<BaselRow> rows;
    rows.reserve(static_cast<std::size_t>(max_m));
    double prev_gap = 0.0;
    for (int m = 1; m <= max_m; ++m) {
        BaselRow row;
        row.m = m;
        row.value = basel_general(m);
        row.numeric = row.value.eval_numeric(15);
        row.approx = row.value.to_double();
        if (row.approx < 1.0)
            throw identity_check_error("basel_limit_table: value below 1 at m=" +
                                       std::to_string(m));
        const double gap = std::abs(row.approx - 2.0);
        if (m > 1 && gap >= prev_gap)
            throw identity_check_error("basel_limit_table: |value - 2| failed to decrease at m=" +
                                       std::to_string(m));
        prev_gap = gap;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace recsum
