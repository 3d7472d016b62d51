#include <doctest.h>

#include <algorithm>
#include <thread>

#include "recsum/engine.hpp"
#include "recsum/harness.hpp"
#include "recsum/rng.hpp"
#include "recsum/special.hpp"

using namespace recsum;

TEST_SUITE_BEGIN("special");

namespace {

MultPartition mp(int m, std::vector<unsigned> mult) { return MultPartition(m, std::move(mult)); }

std::vector<Rational> factorial_args(int count) {
    std::vector<Rational> x;
    for (int i = 0; i < count; ++i) x.emplace_back(factorial(static_cast<unsigned long>(i)));
    return x;
}

} // namespace

TEST_CASE("stirling numbers from the rising factorial") {
    // x(x+1)(x+2) = x^3 + 3x^2 + 2x
    CHECK(stirling_first_unsigned(3, 1) == 2);
    CHECK(stirling_first_unsigned(3, 2) == 3);
    CHECK(stirling_first_unsigned(3, 3) == 1);
    CHECK(stirling_first_unsigned(0, 0) == 1);
    CHECK(stirling_first_unsigned(1, 0) == 0);
    for (int m = 1; m <= 20; ++m) {
        CHECK(stirling_first_unsigned(m, m) == 1);
        CHECK(stirling_first_unsigned(m, 0) == 0);
    }
    CHECK_THROWS_AS(stirling_first_unsigned(3, 4), invalid_input_error);
    CHECK_THROWS_AS(stirling_first_unsigned(-1, 0), invalid_input_error);
}

TEST_CASE("stirling rows sum to m!") {
    for (int m = 0; m <= 20; ++m) {
        Integer sum = 0;
        for (int r = 0; r <= m; ++r) sum += stirling_first_unsigned(m, r);
        CHECK(sum == factorial(static_cast<unsigned long>(m)));
    }
}

TEST_CASE("stirling cache tolerates concurrent growth") {
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([t] {
            for (int m = 0; m <= 30; ++m)
                (void)stirling_first_unsigned(m + t % 2, (m + t % 2) / 2);
        });
    for (auto& w : workers) w.join();
    CHECK(stirling_first_unsigned(5, 1) == 24);
}

TEST_CASE("partial Bell polynomial basics") {
    CHECK(partial_bell(0, 0, {}) == Rational(1));
    CHECK(partial_bell(3, 0, factorial_args(4)) == Rational(0));
    // B_{3,2}(x1, x2) = 3 x1 x2
    CHECK(partial_bell(3, 2, {Rational(1), Rational(1)}) == Rational(3));
    CHECK(partial_bell(3, 2, {Rational(2), Rational(5)}) == Rational(30));
    CHECK_THROWS_AS(partial_bell(3, 2, {Rational(1)}), invalid_input_error);
    CHECK_THROWS_AS(partial_bell(3, 4, factorial_args(4)), invalid_input_error);
}

TEST_CASE("partial Bell at factorial arguments equals the Stirling numbers") {
    for (int m = 0; m <= 10; ++m)
        for (int r = 0; r <= m; ++r)
            CHECK(partial_bell(m, r, factorial_args(std::max(1, m - r + 1))) ==
                  Rational(stirling_first_unsigned(m, r)));
}

TEST_CASE("complete Bell polynomial") {
    CHECK(complete_bell(0, {}) == Rational(1));
    // partitions of 2: {2} and {1,1}
    CHECK(complete_bell(2, {Rational(1), Rational(1)}) == Rational(2));
    CHECK_THROWS_AS(complete_bell(2, {Rational(1)}), invalid_input_error);
}

TEST_CASE("complete Bell at scaled power sums reproduces the reduced sum") {
    // With x_i = (i-1)! S_i and S_i the power sums of a sequence over [q, n],
    // B_m(x_1..x_m)/m! equals the partition-reduced value of the order-m sum.
    SplitMix64 rng(404);
    for (int m = 0; m <= 8; ++m) {
        const long q = 1, n = 5;
        const auto spec = RecurrentSumSpec::same(m, q, n, random_tabulated(rng.next(), q, n));
        std::vector<Rational> x;
        for (int i = 1; i <= std::max(m, 1); ++i) {
            Rational s(0);
            for (long N = q; N <= n; ++N)
                s += spec.seqs.empty() ? Rational(0)
                                       : ring_pow(spec.seqs[0].eval(N), static_cast<unsigned>(i));
            x.push_back(Rational(factorial(static_cast<unsigned long>(i - 1))) * s);
        }
        const Rational via_bell =
            complete_bell(m, x) / Rational(factorial(static_cast<unsigned long>(m)));
        CHECK(via_bell == eval_reduced(spec));
    }
}

TEST_CASE("bernoulli numbers of the first kind") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (int j = 3; j <= 19; j += 2) CHECK(bernoulli(j) == Rational(0));
    CHECK_THROWS_AS(bernoulli(-1), invalid_input_error);
}

TEST_CASE("bernoulli defining recurrence has zero residual") {
    for (int n = 1; n <= 20; ++n) {
        Rational residual(0);
        for (int k = 0; k <= n; ++k)
            residual += Rational(binomial(Integer(n + 1), static_cast<unsigned long>(k))) *
                        bernoulli(k);
        CHECK(residual == Rational(0));
    }
}

TEST_CASE("length-restricted partition sums equal Stirling ratios") {
    CHECK(check_lemma_4_2(4, 2));
    for (int m = 0; m <= 10; ++m) {
        for (int r = 0; r <= m; ++r) CHECK(check_lemma_4_2(m, r));
    }
    CHECK_THROWS_AS(check_lemma_4_2(3, 4), invalid_input_error);
}

TEST_CASE("full partition sums equal one") {
    CHECK(check_lemma_4_3(0));
    CHECK(check_lemma_4_3(6));
    for (int m = 0; m <= 12; ++m) CHECK(check_lemma_4_3(m));
}

TEST_CASE("weighted length-restricted sums (binomial factors)") {
    // all-zero phi reduces to the unweighted identity
    for (int m = 0; m <= 6; ++m)
        for (int r = 0; r <= m; ++r)
            CHECK(check_lemma_4_4(m, r, MultPartition::empty()));
    CHECK(check_lemma_4_4(5, 3, mp(1, {1})));
    CHECK(check_lemma_4_4(4, 2, mp(2, {0, 1})));
    for (int m = 0; m <= 8; ++m)
        for (int w = 0; w <= m; ++w)
            for (const auto& phi : enumerate_partitions(w))
                for (int r = 0; r <= m; ++r) CHECK(check_lemma_4_4(m, r, phi));
    CHECK_THROWS_AS(check_lemma_4_4(2, 1, mp(3, {0, 0, 1})), invalid_input_error);
}

TEST_CASE("weighted full sums (binomial factors)") {
    for (int m = 0; m <= 6; ++m) CHECK(check_lemma_4_5(m, MultPartition::empty()));
    CHECK(check_lemma_4_5(6, mp(3, {1, 1, 0})));
    CHECK(check_lemma_4_5(5, mp(5, {0, 0, 0, 0, 1})));
    for (int m = 0; m <= 8; ++m)
        for (int w = 0; w <= m; ++w)
            for (const auto& phi : enumerate_partitions(w)) CHECK(check_lemma_4_5(m, phi));
    CHECK_THROWS_AS(check_lemma_4_5(2, mp(3, {0, 0, 1})), invalid_input_error);
}

TEST_CASE("binomial-coefficient partition identity") {
    for (int m = 0; m <= 8; ++m) {
        CHECK(check_corollary_4_2(m, 1));  // sums to C(m,m) = 1
        CHECK(check_corollary_4_2(m, 2));  // m + 1
        CHECK(check_corollary_4_2(m, 3));  // (m+1)(m+2)/2
    }
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) CHECK(check_corollary_4_2(m, n));
}

TEST_SUITE_END();
