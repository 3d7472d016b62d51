#include "recsum/special.hpp"

#include <mutex>

namespace recsum {

namespace {

Integer int_pow(unsigned long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

/// 1 / (i^y * y!) as an exact rational.
Rational inv_weight(int i, unsigned y) {
    return Rational(Integer(1), int_pow(static_cast<unsigned long>(i), y) * factorial(y));
}

class StirlingTable {
public:
    Integer at(int m, int r) {
        std::lock_guard<std::mutex> lock(mu_);
        extend(m);
        return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
    }

private:
    // Row m holds the coefficients of x(x+1)...(x+m-1); multiplying by
    // (x + m) produces row m+1.
    void extend(int m) {
        while (rows_.size() <= static_cast<std::size_t>(m)) {
            const std::size_t n = rows_.size();  // building row n from row n-1
            const auto& prev = rows_[n - 1];
            std::vector<Integer> row(n + 1, Integer(0));
            for (std::size_t r = 0; r < prev.size(); ++r) {
                row[r + 1] += prev[r];
                row[r] += Integer(static_cast<unsigned long>(n - 1)) * prev[r];
            }
            rows_.push_back(std::move(row));
        }
    }

    std::mutex mu_;
    std::vector<std::vector<Integer>> rows_{{Integer(1)}};  // row 0: constant 1
};

StirlingTable& stirling_table() {
    static StirlingTable table;
    return table;
}

class BernoulliCache {
public:
    Rational at(int j) {
        std::lock_guard<std::mutex> lock(mu_);
        // B_n = -1/(n+1) * sum_{k=0..n-1} C(n+1, k) B_k
        while (values_.size() <= static_cast<std::size_t>(j)) {
            const unsigned long n = values_.size();
            Rational sum(0);
            for (unsigned long k = 0; k < n; ++k)
                sum += Rational(binomial(Integer(n + 1), k)) * values_[k];
            values_.push_back(-sum / Rational(static_cast<long>(n + 1)));
        }
        return values_[static_cast<std::size_t>(j)];
    }

private:
    std::mutex mu_;
    std::vector<Rational> values_{Rational(1)};
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

} // namespace

Integer stirling_first_unsigned(int m, int r) {
    if (m < 0 || r < 0 || r > m)
        throw invalid_input_error("stirling_first_unsigned: requires 0 <= r <= m");
    return stirling_table().at(m, r);
}

Rational partial_bell(int m, int r, const std::vector<Rational>& x) {
    if (m < 0 || r < 0 || r > m)
        throw invalid_input_error("partial_bell: requires 0 <= r <= m");
    if (m >= 1 && r >= 1 && x.size() < static_cast<std::size_t>(m - r + 1))
        throw invalid_input_error("partial_bell: needs at least m-r+1 arguments");
    Rational sum(0);
    for (const auto& part : enumerate_partitions_with_length(m, r)) {
        Rational term(1);
        for (int i = 1; i <= m; ++i) {
            const unsigned y = part.multiplicity(i);
            if (y == 0) continue;
            // i <= m-r+1 whenever y_i > 0 in a length-r partition.
            const Rational scaled = x[static_cast<std::size_t>(i - 1)] /
                                    Rational(factorial(static_cast<unsigned long>(i)));
            term *= scaled.pow(y) / Rational(factorial(y));
        }
        sum += term;
    }
    return Rational(factorial(static_cast<unsigned long>(m))) * sum;
}

Rational complete_bell(int m, const std::vector<Rational>& x) {
    if (m < 0) throw invalid_input_error("complete_bell: m must be non-negative");
    if (x.size() < static_cast<std::size_t>(m))
        throw invalid_input_error("complete_bell: needs at least m arguments");
    Rational sum(0);
    for (int r = 0; r <= m; ++r) sum += partial_bell(m, r, x);
    return sum;
}

Rational bernoulli(int j) {
    if (j < 0) throw invalid_input_error("bernoulli: index must be non-negative");
    return bernoulli_cache().at(j);
}

bool check_lemma_4_2(int m, int r) {
    if (m < 0 || r < 0 || r > m)
        throw invalid_input_error("check_lemma_4_2: requires 0 <= r <= m");
    Rational lhs(0);
    for (const auto& part : enumerate_partitions_with_length(m, r)) {
        Rational term(1);
        for (int i = 1; i <= m; ++i) term *= inv_weight(i, part.multiplicity(i));
        lhs += term;
    }
    const Rational rhs(stirling_first_unsigned(m, r), factorial(static_cast<unsigned long>(m)));
    return lhs == rhs;
}

bool check_lemma_4_3(int m) {
    if (m < 0) throw invalid_input_error("check_lemma_4_3: m must be non-negative");
    Rational lhs(0);
    for (const auto& part : enumerate_partitions(m)) {
        Rational term(1);
        for (int i = 1; i <= m; ++i) term *= inv_weight(i, part.multiplicity(i));
        lhs += term;
    }
    return lhs == Rational(1);
}

namespace {

/// prod over i of C(y_i, phi_i) / (i^{y_i} y_i!). Vanishes unless
/// y_i >= phi_i everywhere.
Rational weighted_term(int m, const MultPartition& part, const MultPartition& phi) {
    Rational term(1);
    for (int i = 1; i <= m; ++i) {
        const unsigned y = part.multiplicity(i);
        const unsigned ph = phi.multiplicity(i);
        if (ph > y) return Rational(0);
        term *= Rational(binomial(Integer(y), ph)) * inv_weight(i, y);
    }
    return term;
}

/// prod over i = 1..bound of 1/(i^{phi_i} phi_i!).
Rational phi_weight(const MultPartition& phi, int bound) {
    Rational out(1);
    for (int i = 1; i <= bound; ++i) out *= inv_weight(i, phi.multiplicity(i));
    return out;
}

} // namespace

bool check_lemma_4_4(int m, int r, const MultPartition& phi) {
    if (m < 0 || r < 0 || r > m)
        throw invalid_input_error("check_lemma_4_4: requires 0 <= r <= m");
    const int weight = phi.m();
    if (weight > m)
        throw invalid_input_error("check_lemma_4_4: weight of phi must not exceed m");
    const int r_phi = phi.length();

    Rational lhs(0);
    for (const auto& part : enumerate_partitions_with_length(m, r))
        lhs += weighted_term(m, part, phi);

    // The product over i is the same whether taken to m or cut at the weight
    // of phi (phi_i = 0 above it); both are computed and must agree.
    const Rational prod_full = phi_weight(phi, m);
    const Rational prod_cut = phi_weight(phi, weight);
    if (!(prod_full == prod_cut))
        throw identity_check_error("check_lemma_4_4: product bounds m and weight(phi) disagree");

    const int lower = r - r_phi;
    Rational rhs(0);
    if (lower >= 0 && lower <= m - weight)
        rhs = Rational(stirling_first_unsigned(m - weight, lower),
                       factorial(static_cast<unsigned long>(m - weight))) *
              prod_full;
    return lhs == rhs;
}

bool check_lemma_4_5(int m, const MultPartition& phi) {
    if (m < 0) throw invalid_input_error("check_lemma_4_5: m must be non-negative");
    if (phi.m() > m)
        throw invalid_input_error("check_lemma_4_5: weight of phi must not exceed m");
    Rational lhs(0);
    for (const auto& part : enumerate_partitions(m)) lhs += weighted_term(m, part, phi);
    return lhs == phi_weight(phi, m);
}

bool check_corollary_4_2(int m, int n) {
    if (m < 0 || n < 0)
        throw invalid_input_error("check_corollary_4_2: m, n must be non-negative");
    Rational lhs(0);
    for (const auto& part : enumerate_partitions(m)) {
        Rational term(1);
        for (int i = 1; i <= m; ++i) {
            const unsigned y = part.multiplicity(i);
            if (y == 0) continue;
            term *= Rational(n, i).pow(y) / Rational(factorial(y));
        }
        lhs += term;
    }
    return lhs == Rational(binomial(Integer(n) + m - 1, static_cast<unsigned long>(m)));
}

} // namespace recsum
