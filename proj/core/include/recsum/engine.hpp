#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recsum/partitions.hpp"
#include "recsum/rational.hpp"
#include "recsum/ring.hpp"

namespace recsum {

/// Symbolic description of a sequence a_N: an integer power of N, a rational
/// constant, or a finite table of rationals.
class SeqSpec {
public:
    enum class Kind { Power, Constant, Tabulated };

    static SeqSpec power(long exponent);
    static SeqSpec constant(Rational value);
    static SeqSpec tabulated(std::vector<Rational> values, long first_index);

    Kind kind() const { return kind_; }
    long exponent() const { return exponent_; }
    const Rational& constant_value() const { return constant_; }
    const std::vector<Rational>& values() const { return values_; }
    long first_index() const { return first_index_; }

    /// a_N, exactly. Power with a negative exponent rejects N = 0; Tabulated
    /// rejects indices outside its table.
    Rational eval(long N) const;

    /// `pow:2`, `const:5/3`, `tab:[1,1/2,...]@1`.
    std::string to_string() const;

    friend bool operator==(const SeqSpec&, const SeqSpec&) = default;

private:
    Kind kind_ = Kind::Constant;
    long exponent_ = 0;
    Rational constant_;
    std::vector<Rational> values_;
    long first_index_ = 0;
};

/// A recurrent sum R_{m,q,n}: the sum over non-decreasing index tuples
/// q <= N_1 <= ... <= N_m <= n of prod_k a_{(k);N_k}.
///
/// Sequences are listed INNERMOST FIRST: seqs[0] is a_{(1)}, the sequence of
/// the innermost summation index N_1. Every JSON and CLI surface uses the
/// same order.
struct RecurrentSumSpec {
    int m = 0;
    long q = 0;
    long n = 0;
    std::vector<SeqSpec> seqs;

    /// m copies of one sequence (the same-sequence case).
    static RecurrentSumSpec same(int m, long q, long n, const SeqSpec& s);
    static RecurrentSumSpec of(long q, long n, std::vector<SeqSpec> seqs);

    /// Throws invalid_input_error unless m >= 0, |seqs| == m, and n >= q
    /// whenever m >= 1. (n < q is an error, not an empty sum.)
    void validate() const;

    bool all_same() const;

    /// The spec truncated to its k innermost sequences, same bounds.
    RecurrentSumSpec inner(int k) const;
};

/// Operation counters, filled in by the evaluators when requested.
struct EvalStats {
    std::uint64_t terms_touched = 0;
    std::uint64_t ring_ops = 0;
    std::uint64_t power_sum_updates = 0;
};

/// Tuple guard for the direct evaluator; the default is 10^7 and can be
/// overridden with the RECSUM_NAIVE_GUARD environment variable.
std::uint64_t naive_tuple_guard();

/// Number of tuples eval_naive would touch: C(n-q+m, m).
Integer naive_tuple_count(const RecurrentSumSpec& spec);

/// Direct enumeration of all non-decreasing tuples. The reference oracle
/// every other evaluator is checked against. m = 0 yields 1. Throws
/// resource_guard_error (naming the tuple count) when C(n-q+m, m) exceeds
/// the guard; pass `guard` to override the environment default.
Rational eval_naive(const RecurrentSumSpec& spec, EvalStats* stats = nullptr,
                    std::optional<std::uint64_t> guard = std::nullopt);

/// Incremental evaluation: maintains (R_0, ..., R_m) while the upper bound
/// grows from q-1 (state (1, 0, ..., 0)) to n, applying at each step t the
/// variation update
///   R_k(t) = sum_{j=0..k} (prod_{l=j+1..k} a_{(l);t}) R_j(t-1).
/// O((n-q+1) m^2) ring operations; works for distinct sequences, the fast
/// path the reduction theorem does not cover.
Rational eval_incremental(const RecurrentSumSpec& spec, EvalStats* stats = nullptr);

/// One term of the partition expansion of a same-sequence recurrent sum:
/// coefficient = prod_i 1/(y_i! i^{y_i}), applied to prod_i S_i^{y_i} where
/// S_i is the i-th power sum and y the partition's multiplicity vector.
struct ReductionTerm {
    MultPartition partition;
    Rational coefficient;
};

struct ReductionExpansion {
    int m = 0;
    std::vector<ReductionTerm> terms;  // one per partition of m, enumeration order
};

/// Symbolic partition expansion of order m, usable for display and for
/// evaluation against any power-sum vector.
ReductionExpansion expand_reduction(int m);

/// Combines power sums S_1..S_m (S[i-1] = S_i) into the reduced value
///   sum over partitions of m of prod_i (1/y_i!) (S_i / i)^{y_i},
/// in any value ring. This is the single reduction path shared by the
/// rational evaluator and the zeta closed forms.
template <ValueRing R>
R reduced_from_power_sums(int m, const std::vector<R>& power_sums, EvalStats* stats = nullptr) {
    if (m < 0) throw invalid_input_error("reduced_from_power_sums: m must be non-negative");
    if (power_sums.size() < static_cast<std::size_t>(m))
        throw invalid_input_error("reduced_from_power_sums: needs m power sums");
    R total(0);
    for (const auto& term : expand_reduction(m).terms) {
        R value(term.coefficient);
        for (int i = 1; i <= m; ++i) {
            const unsigned y = term.partition.multiplicity(i);
            if (y == 0) continue;
            value = value * ring_pow(power_sums[static_cast<std::size_t>(i - 1)], y);
            if (stats) stats->ring_ops += y;
        }
        total = total + value;
        if (stats) {
            ++stats->terms_touched;
            ++stats->ring_ops;
        }
    }
    return total;
}

/// Reduction-theorem evaluation for the same-sequence case: computes the
/// power sums S_i = sum_{N=q..n} (a_N)^i and combines them over the
/// partitions of m. Exact; p(m) partition terms plus m*(n-q+1) power-sum
/// updates. Rejects specs with distinct sequences (use eval_general_reduced).
Rational eval_reduced(const RecurrentSumSpec& spec, EvalStats* stats = nullptr);

/// Which inversion identity to evaluate. Each evaluates the right-hand side
/// of the named statement with its own loop structure, never by delegating
/// to eval_naive — they exist to test the identities.
enum class InversionMode {
    Full,       ///< complete inversion: innermost becomes outermost and vice versa
    Rotate,     ///< the innermost summation becomes the outermost, rest shift
    PartialInvert,  ///< the p innermost summations inverted, outer m-p untouched
    PartialRotate,  ///< the innermost summation pulled back to the p-th position
};

InversionMode parse_inversion_mode(const std::string& name);
std::string to_string(InversionMode mode);

/// Evaluates the inverted-order form of the sum. `p` applies to the partial
/// modes and must lie in [0, m]; the full/rotate modes ignore it.
Rational eval_inverted(const RecurrentSumSpec& spec, InversionMode mode, int p = 0,
                       EvalStats* stats = nullptr);

/// Reduction for distinct sequences: the sum over set partitions P of
/// {1..m} of prod_i [(i-1)!]^{y_i} * prod_{blocks B} sum_N prod_{h in B}
/// a_{(h);N}. This equals the SYMMETRIZED sum over all m! sequence
/// permutations of R_{m,q,n}, not R itself. Requires m within the
/// set-partition guard.
Rational eval_general_reduced(const RecurrentSumSpec& spec, EvalStats* stats = nullptr);

/// Evaluates both sides of the variation identities (the basic step, the
/// expanded sum, its Horner form, and the two pivot-p generalizations) with
/// independently computed R-values from the direct evaluator; returns the
/// conjunction of the exact equalities. Requires 0 <= p <= m and sequences
/// defined through n+1.
bool check_variation_identities(const RecurrentSumSpec& spec, int p);

} // namespace recsum
