#include <doctest.h>

#include <cstdlib>

#include "recsum/zeta.hpp"

using namespace recsum;

TEST_SUITE_BEGIN("zeta");

namespace {

PiPoly pi_term(const char* coeff, unsigned exponent) {
    return PiPoly::monomial(Rational::parse(coeff), exponent);
}

} // namespace

TEST_CASE("power sums in closed form") {
    CHECK(faulhaber_sum(4, 1) == Rational(10));
    CHECK(faulhaber_sum(3, 2) == Rational(14));
    CHECK(faulhaber_sum(7, 0) == Rational(7));
    CHECK(faulhaber_sum(0, 5) == Rational(0));
    // against direct summation
    for (int p = 0; p <= 6; ++p)
        for (long n = 0; n <= 20; ++n) {
            Rational direct(0);
            for (long N = 1; N <= n; ++N)
                direct += Rational(Integer(N)).pow(static_cast<unsigned long>(p));
            CHECK(faulhaber_sum(n, p) == direct);
        }
    CHECK_THROWS_AS(faulhaber_sum(-1, 2), invalid_input_error);
}

TEST_CASE("recurrent power sums match the direct nested sum") {
    for (int m = 1; m <= 4; ++m)
        for (int p = 0; p <= 3; ++p)
            for (long n = 1; n <= 12; ++n)
                CHECK(recurrent_faulhaber(m, p, n) ==
                      eval_naive(RecurrentSumSpec::same(m, 1, n, SeqSpec::power(p))));
    CHECK_THROWS_AS(recurrent_faulhaber(0, 1, 3), invalid_input_error);
}

TEST_CASE("published closed-form polynomials hold through n = 30") {
    for (long n = 0; n <= 30; ++n) {
        const Rational nn(n);
        CHECK(recurrent_faulhaber(2, 1, n) ==
              nn * (nn + 1) * (nn + 2) * (Rational(3) * nn + 1) / Rational(24));
        CHECK(recurrent_faulhaber(2, 2, n) ==
              nn * (nn + 1) * (nn + 2) * (Rational(2) * nn + 1) * (Rational(2) * nn + 3) *
                  (Rational(5) * nn - 1) / Rational(360));
        CHECK(recurrent_faulhaber(3, 1, n) ==
              nn * nn * (nn + 1) * (nn + 1) * (nn + 2) * (nn + 3) / Rational(48));
    }
}

TEST_CASE("even zeta closed forms reproduce the published table") {
    CHECK(zeta_even(1) == pi_term("1/6", 2));
    CHECK(zeta_even(2) == pi_term("1/90", 4));
    CHECK(zeta_even(3) == pi_term("1/945", 6));
    CHECK(zeta_even(4) == pi_term("1/9450", 8));
    CHECK(zeta_even(5) == pi_term("1/93555", 10));
    CHECK(zeta_even(6) == pi_term("691/638512875", 12));
    CHECK(zeta_even(7) == pi_term("2/18243225", 14));
    CHECK(zeta_even(8) == pi_term("3617/325641566250", 16));
    CHECK_THROWS_AS(zeta_even(0), invalid_input_error);
    CHECK_THROWS_AS(zeta_even(-2), invalid_input_error);
}

TEST_CASE("even zeta coefficients are positive single terms") {
    for (int m = 1; m <= 12; ++m) {
        const PiPoly z = zeta_even(m);
        REQUIRE(z.term_count() == 1);
        CHECK(z.coefficient(2 * static_cast<unsigned>(m)) > Rational(0));
    }
}

TEST_CASE("recurrent even zeta-star values") {
    CHECK(recurrent_zeta_star_even(4, 1) == pi_term("127/604800", 8));
    CHECK(recurrent_zeta_star_even(2, 1) == pi_term("7/360", 4));
    for (int p = 1; p <= 4; ++p) CHECK(recurrent_zeta_star_even(1, p) == zeta_even(p));
    CHECK_THROWS_AS(recurrent_zeta_star_even(0, 1), invalid_input_error);
    CHECK_THROWS_AS(recurrent_zeta_star_even(1, 0), invalid_input_error);
}

TEST_CASE("zeta-star degree bookkeeping: one term with exponent 2pm") {
    for (int m = 1; m <= 5; ++m)
        for (int p = 1; p <= 3; ++p) {
            const PiPoly v = recurrent_zeta_star_even(m, p);
            REQUIRE(v.term_count() == 1);
            CHECK(!v.coefficient(2 * static_cast<unsigned>(p * m)).is_zero());
        }
}

TEST_CASE("generalized Basel values") {
    CHECK(basel_general(1) == pi_term("1/6", 2));         // 2 - 1 = 1 times zeta(2)
    CHECK(basel_general(2) == pi_term("7/360", 4));       // (7/4) * pi^4/90
    CHECK(basel_general(4) == pi_term("127/604800", 8));
    for (int m = 1; m <= 6; ++m) CHECK(basel_general(m) == recurrent_zeta_star_even(m, 1));
    CHECK_THROWS_AS(basel_general(0), invalid_input_error);
}

TEST_CASE("numeric value of the order-4 sum") {
    CHECK(recurrent_zeta_star_even(4, 1).eval_numeric(10) == "1.992466004");
}

TEST_CASE("bernoulli partition identity at p = 1") {
    CHECK(bernoulli_partition_identity(1, 1));  // both sides -1/24
    for (int m = 1; m <= 8; ++m) CHECK(bernoulli_partition_identity(m, 1));
    CHECK_THROWS_AS(bernoulli_partition_identity(0, 1), invalid_input_error);
}

TEST_CASE("sign-factored form agrees with the production path") {
    for (int m = 1; m <= 6; ++m)
        CHECK(recurrent_zeta_star_even_bernoulli_form(m, 1) == recurrent_zeta_star_even(m, 1));
    // The Euler substitution behind the factored form is p-independent.
    for (int m = 1; m <= 3; ++m)
        for (int p = 2; p <= 3; ++p)
            CHECK(recurrent_zeta_star_even_bernoulli_form(m, p) ==
                  recurrent_zeta_star_even(m, p));
}

TEST_CASE("truncated sums approach the closed form from below") {
    const auto report = truncated_zeta_star(1, 1, 1000);
    CHECK(std::strtod(report.abs_error.c_str(), nullptr) < 1e-3);  // tail below 1/n
    CHECK(report.partial < Rational(2));

    const auto small = truncated_zeta_star(4, 1, 40);
    const double target = small.target.to_double();
    CHECK(small.partial.to_double() < target);

    Rational prev(0);
    for (long n = 1; n <= 6; ++n) {
        const auto r = truncated_zeta_star(2, 1, n);
        CHECK(r.partial > prev);
        CHECK(r.partial.to_double() < r.target.to_double());
        prev = r.partial;
    }
    CHECK_THROWS_AS(truncated_zeta_star(0, 1, 10), invalid_input_error);
    CHECK_THROWS_AS(truncated_zeta_star(2, 1, 200000), resource_guard_error);
}

TEST_CASE("limit table approaches 2 monotonically within [1, 2)") {
    const auto rows = basel_limit_table(8);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].approx == doctest::Approx(1.6449).epsilon(1e-3));
    CHECK(rows[3].approx == doctest::Approx(1.99247).epsilon(1e-4));
    CHECK(std::abs(rows[7].approx - 2.0) < 1e-4);
    double prev_gap = 1e9;
    for (const auto& row : rows) {
        CHECK(row.approx >= 1.0);
        CHECK(row.approx < 2.0);
        const double gap = std::abs(row.approx - 2.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    // Divergence of the series over m: the order-0 term is 1 and every later
    // term is at least 1, so partial sums dominate the term count.
    const auto eleven = basel_limit_table(10);
    double partial = 1.0;
    for (const auto& row : eleven) partial += row.approx;
    CHECK(partial > 11.0);
}

TEST_SUITE_END();
