#include "recsum/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace recsum {

SeqSpec SeqSpec::power(long exponent) {
    SeqSpec s;
    s.kind_ = Kind::Power;
    s.exponent_ = exponent;
    return s;
}

SeqSpec SeqSpec::constant(Rational value) {
    SeqSpec s;
    s.kind_ = Kind::Constant;
    s.constant_ = std::move(value);
    return s;
}

SeqSpec SeqSpec::tabulated(std::vector<Rational> values, long first_index) {
    if (values.empty()) throw invalid_input_error("tabulated sequence: empty table");
    SeqSpec s;
    s.kind_ = Kind::Tabulated;
    s.values_ = std::move(values);
    s.first_index_ = first_index;
    return s;
}

Rational SeqSpec::eval(long N) const {
    switch (kind_) {
        case Kind::Power: {
            if (exponent_ >= 0)
                return Rational(Integer(N)).pow(static_cast<unsigned long>(exponent_));
            if (N == 0)
                throw invalid_input_error("sequence pow:" + std::to_string(exponent_) +
                                          " undefined at N=0");
            return Rational(Integer(N)).pow(static_cast<unsigned long>(-exponent_)).reciprocal();
        }
        case Kind::Constant:
            return constant_;
        case Kind::Tabulated: {
            const long off = N - first_index_;
            if (off < 0 || off >= static_cast<long>(values_.size()))
                throw invalid_input_error("tabulated sequence: index " + std::to_string(N) +
                                          " outside [" + std::to_string(first_index_) + ", " +
                                          std::to_string(first_index_ +
                                                         static_cast<long>(values_.size()) - 1) +
                                          "]");
            return values_[static_cast<std::size_t>(off)];
        }
    }
    throw invalid_input_error("sequence: unknown kind");
}

std::string SeqSpec::to_string() const {
    switch (kind_) {
        case Kind::Power:
            return "pow:" + std::to_string(exponent_);
        case Kind::Constant:
            return "const:" + constant_.to_string();
        case Kind::Tabulated: {
            std::string out = "tab:[";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i) out += ",";
                out += values_[i].to_string();
            }
            out += "]@" + std::to_string(first_index_);
            return out;
        }
    }
    return "?";
}

RecurrentSumSpec RecurrentSumSpec::same(int m, long q, long n, const SeqSpec& s) {
    RecurrentSumSpec spec;
    spec.m = m;
    spec.q = q;
    spec.n = n;
    spec.seqs.assign(static_cast<std::size_t>(m), s);
    spec.validate();
    return spec;
}

RecurrentSumSpec RecurrentSumSpec::of(long q, long n, std::vector<SeqSpec> seqs) {
    RecurrentSumSpec spec;
    spec.m = static_cast<int>(seqs.size());
    spec.q = q;
    spec.n = n;
    spec.seqs = std::move(seqs);
    spec.validate();
    return spec;
}

void RecurrentSumSpec::validate() const {
    if (m < 0) throw invalid_input_error("recurrent sum: order must be non-negative");
    if (seqs.size() != static_cast<std::size_t>(m))
        throw invalid_input_error("recurrent sum: expected exactly m sequences (innermost first)");
    if (m >= 1 && n < q)
        throw invalid_input_error("recurrent sum: requires n >= q for m >= 1");
}

bool RecurrentSumSpec::all_same() const {
    for (std::size_t k = 1; k < seqs.size(); ++k)
        if (!(seqs[k] == seqs[0])) return false;
    return true;
}

RecurrentSumSpec RecurrentSumSpec::inner(int k) const {
    if (k < 0 || k > m) throw invalid_input_error("recurrent sum: inner order out of range");
    RecurrentSumSpec out;
    out.m = k;
    out.q = q;
    out.n = n;
    out.seqs.assign(seqs.begin(), seqs.begin() + k);
    return out;
}

std::uint64_t naive_tuple_guard() {
    if (const char* env = std::getenv("RECSUM_NAIVE_GUARD")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}

Integer naive_tuple_count(const RecurrentSumSpec& spec) {
    spec.validate();
    if (spec.m == 0) return 1;
    return binomial(Integer(spec.n - spec.q + spec.m), static_cast<unsigned long>(spec.m));
}

Rational eval_naive(const RecurrentSumSpec& spec, EvalStats* stats,
                    std::optional<std::uint64_t> guard) {
    spec.validate();
    const std::uint64_t limit = guard.value_or(naive_tuple_guard());
    const Integer tuples = naive_tuple_count(spec);
    if (tuples > static_cast<unsigned long>(limit))
        throw resource_guard_error("eval_naive: " + tuples.get_str() +
                                       " tuples exceed the guard of " + std::to_string(limit),
                                   static_cast<std::uint64_t>(tuples.fits_ulong_p()
                                                                  ? tuples.get_ui()
                                                                  : ~0ULL),
                                   limit);
    if (spec.m == 0) {
        if (stats) ++stats->terms_touched;
        return Rational(1);
    }

    Rational total(0);
    // depth k runs from the outermost index m down to the innermost 1;
    // N_k ranges over [q, upper] where upper is N_{k+1} (n at the top).
    std::function<void(int, long, const Rational&)> descend =
        [&](int k, long upper, const Rational& partial) {
            const std::size_t seq = static_cast<std::size_t>(k - 1);
            for (long N = spec.q; N <= upper; ++N) {
                Rational product = partial * spec.seqs[seq].eval(N);
                if (stats) ++stats->ring_ops;
                if (k == 1) {
                    total += product;
                    if (stats) {
                        ++stats->terms_touched;
                        ++stats->ring_ops;
                    }
                } else {
                    descend(k - 1, N, product);
                }
            }
        };
    descend(spec.m, spec.n, Rational(1));
    return total;
}

Rational eval_incremental(const RecurrentSumSpec& spec, EvalStats* stats) {
    spec.validate();
    if (spec.m == 0) {
        if (stats) ++stats->terms_touched;
        return Rational(1);
    }
    // state[k] = R_{k,q,t}; at t = q-1 only the order-0 sum is non-zero.
    std::vector<Rational> state(static_cast<std::size_t>(spec.m) + 1, Rational(0));
    state[0] = Rational(1);
    for (long t = spec.q; t <= spec.n; ++t) {
        std::vector<Rational> next(state.size());
        next[0] = state[0];
        for (int k = 1; k <= spec.m; ++k) {
            // R_k(t) = sum_{j=0..k} (prod_{l=j+1..k} a_{(l);t}) R_j(t-1),
            // accumulating the sequence product as j descends.
            Rational acc = state[static_cast<std::size_t>(k)];
            Rational prod(1);
            for (int j = k - 1; j >= 0; --j) {
                prod *= spec.seqs[static_cast<std::size_t>(j)].eval(t);
                acc += prod * state[static_cast<std::size_t>(j)];
                if (stats) stats->ring_ops += 3;
            }
            next[static_cast<std::size_t>(k)] = acc;
        }
        state = std::move(next);
        if (stats) stats->terms_touched += static_cast<std::uint64_t>(spec.m);
    }
    return state[static_cast<std::size_t>(spec.m)];
}

ReductionExpansion expand_reduction(int m) {
    if (m < 0) throw invalid_input_error("expand_reduction: m must be non-negative");
    ReductionExpansion out;
    out.m = m;
    for (auto& part : enumerate_partitions(m)) {
        Rational coeff(1);
        for (int i = 1; i <= m; ++i) {
            const unsigned y = part.multiplicity(i);
            if (y == 0) continue;
            Integer ipow;
            mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i), y);
            const Integer denom = ipow * factorial(y);
            coeff /= Rational(denom);
        }
        out.terms.push_back({std::move(part), coeff});
    }
    return out;
}

Rational eval_reduced(const RecurrentSumSpec& spec, EvalStats* stats) {
    spec.validate();
    if (!spec.all_same())
        throw invalid_input_error(
            "eval_reduced: the reduction theorem covers identical sequences only; "
            "use eval_general_reduced for distinct sequences");
    if (spec.m == 0) {
        if (stats) ++stats->terms_touched;
        return Rational(1);
    }
    // S_i = sum_{N=q..n} (a_N)^i, built with one multiply per (N, i).
    std::vector<Rational> power_sums(static_cast<std::size_t>(spec.m), Rational(0));
    for (long N = spec.q; N <= spec.n; ++N) {
        const Rational a = spec.seqs[0].eval(N);
        Rational pw(1);
        for (int i = 1; i <= spec.m; ++i) {
            pw *= a;
            power_sums[static_cast<std::size_t>(i - 1)] += pw;
            if (stats) {
                ++stats->power_sum_updates;
                stats->ring_ops += 2;
            }
        }
    }
    return reduced_from_power_sums(spec.m, power_sums, stats);
}

InversionMode parse_inversion_mode(const std::string& name) {
    if (name == "full") return InversionMode::Full;
    if (name == "rotate") return InversionMode::Rotate;
    if (name == "partial-invert") return InversionMode::PartialInvert;
    if (name == "partial-rotate") return InversionMode::PartialRotate;
    throw invalid_input_error("unknown inversion mode '" + name +
                              "' (full|rotate|partial-invert|partial-rotate)");
}

std::string to_string(InversionMode mode) {
    switch (mode) {
        case InversionMode::Full: return "full";
        case InversionMode::Rotate: return "rotate";
        case InversionMode::PartialInvert: return "partial-invert";
        case InversionMode::PartialRotate: return "partial-rotate";
    }
    return "?";
}

namespace {

/// sum over N in [lo, hi] of a_{(seq_index);N} * rest(N).
Rational loop_sum(const RecurrentSumSpec& spec, int seq_index, long lo, long hi,
                  EvalStats* stats, const std::function<Rational(long)>& rest) {
    Rational total(0);
    for (long N = lo; N <= hi; ++N) {
        total += spec.seqs[static_cast<std::size_t>(seq_index - 1)].eval(N) * rest(N);
        if (stats) {
            ++stats->terms_touched;
            stats->ring_ops += 2;
        }
    }
    return total;
}

/// Fully inverted order: N_1 outermost from q, every later index bounded
/// below by its predecessor and above by n.
Rational inverted_full(const RecurrentSumSpec& spec, EvalStats* stats) {
    std::function<Rational(int, long)> ascend = [&](int d, long lower) -> Rational {
        if (d > spec.m) return Rational(1);
        return loop_sum(spec, d, lower, spec.n, stats,
                        [&](long N) { return ascend(d + 1, N); });
    };
    return ascend(1, spec.q);
}

/// N_1 moved outermost; the remaining indices keep their relative order with
/// lower bound N_1: N_m in [N_1, n], then N_d in [N_1, N_{d+1}] down to N_2.
Rational inverted_rotate(const RecurrentSumSpec& spec, EvalStats* stats) {
    std::function<Rational(int, long, long)> descend = [&](int d, long base,
                                                           long upper) -> Rational {
        if (d == 1) return Rational(1);
        return loop_sum(spec, d, base, upper, stats,
                        [&](long N) { return descend(d - 1, base, N); });
    };
    return loop_sum(spec, 1, spec.q, spec.n, stats, [&](long N1) {
        if (spec.m == 1) return Rational(1);
        return descend(spec.m, N1, spec.n);
    });
}

/// Outer indices m..p+1 keep the original nesting; inside, the p innermost
/// are fully inverted below the bound N_{p+1}.
Rational inverted_partial_invert(const RecurrentSumSpec& spec, int p, EvalStats* stats) {
    std::function<Rational(int, long)> inner_ascend;
    std::function<Rational(int, long)> outer = [&](int d, long upper) -> Rational {
        if (d == p) {
            if (p == 0) return Rational(1);
            return inner_ascend(1, upper);
        }
        return loop_sum(spec, d, spec.q, upper, stats,
                        [&](long N) { return outer(d - 1, N); });
    };
    inner_ascend = [&](int d, long bound) -> Rational {
        // N_1 in [q, bound]; N_d in [N_{d-1}, bound] for d = 2..p.
        std::function<Rational(int, long, long)> go = [&](int dd, long lower,
                                                          long bnd) -> Rational {
            if (dd > p) return Rational(1);
            return loop_sum(spec, dd, lower, bnd, stats,
                            [&](long N) { return go(dd + 1, N, bnd); });
        };
        (void)d;
        return go(1, spec.q, bound);
    };
    if (p == spec.m) return inner_ascend(1, spec.n);
    return outer(spec.m, spec.n);
}

/// Outer indices m..p+1 keep the original nesting; inside, N_1 is pulled to
/// the p-th position: N_1 in [q, B], N_p in [N_1, B], then N_d in
/// [N_1, N_{d+1}] down to N_2.
Rational inverted_partial_rotate(const RecurrentSumSpec& spec, int p, EvalStats* stats) {
    std::function<Rational(long)> inner = [&](long bound) -> Rational {
        std::function<Rational(int, long, long)> down = [&](int d, long base,
                                                            long upper) -> Rational {
            if (d == 1) return Rational(1);
            return loop_sum(spec, d, base, upper, stats,
                            [&](long N) { return down(d - 1, base, N); });
        };
        return loop_sum(spec, 1, spec.q, bound, stats, [&](long N1) {
            if (p <= 1) return Rational(1);
            return down(p, N1, bound);
        });
    };
    std::function<Rational(int, long)> outer = [&](int d, long upper) -> Rational {
        if (d == p) {
            if (p == 0) return Rational(1);
            return inner(upper);
        }
        return loop_sum(spec, d, spec.q, upper, stats,
                        [&](long N) { return outer(d - 1, N); });
    };
    if (p == spec.m) return inner(spec.n);
    return outer(spec.m, spec.n);
}

} // namespace

Rational eval_inverted(const RecurrentSumSpec& spec, InversionMode mode, int p,
                       EvalStats* stats) {
    spec.validate();
    if (spec.m == 0) {
        if (stats) ++stats->terms_touched;
        return Rational(1);
    }
    switch (mode) {
        case InversionMode::Full:
            return inverted_full(spec, stats);
        case InversionMode::Rotate:
            return inverted_rotate(spec, stats);
        case InversionMode::PartialInvert:
            if (p < 0 || p > spec.m)
                throw invalid_input_error("eval_inverted: p must lie in [0, m]");
            return inverted_partial_invert(spec, p, stats);
        case InversionMode::PartialRotate:
            if (p < 0 || p > spec.m)
                throw invalid_input_error("eval_inverted: p must lie in [0, m]");
            return inverted_partial_rotate(spec, p, stats);
    }
    throw invalid_input_error("eval_inverted: unknown mode");
}

Rational eval_general_reduced(const RecurrentSumSpec& spec, EvalStats* stats) {
    spec.validate();
    if (spec.m == 0) {
        if (stats) ++stats->terms_touched;
        return Rational(1);
    }
    if (spec.m > kSetPartitionGuard)
        throw resource_guard_error(
            "eval_general_reduced: order " + std::to_string(spec.m) +
                " exceeds the set-partition guard of " + std::to_string(kSetPartitionGuard),
            static_cast<std::uint64_t>(spec.m), static_cast<std::uint64_t>(kSetPartitionGuard));

    Rational total(0);
    for (const auto& P : enumerate_set_partitions(spec.m)) {
        // prod over block sizes i of [(i-1)!]^{y_i}
        Integer cycle_weight = 1;
        for (const auto& block : P.blocks())
            cycle_weight *= factorial(static_cast<unsigned long>(block.size() - 1));
        Rational term{cycle_weight};
        for (const auto& block : P.blocks()) {
            Rational block_sum(0);
            for (long N = spec.q; N <= spec.n; ++N) {
                Rational prod(1);
                for (int h : block) prod *= spec.seqs[static_cast<std::size_t>(h - 1)].eval(N);
                block_sum += prod;
                if (stats) stats->ring_ops += static_cast<std::uint64_t>(block.size()) + 1;
            }
            term *= block_sum;
            if (stats) ++stats->ring_ops;
        }
        total += term;
        if (stats) {
            ++stats->terms_touched;
            ++stats->ring_ops;
        }
    }
    return total;
}

bool check_variation_identities(const RecurrentSumSpec& spec, int p) {
    spec.validate();
    if (p < 0 || p > spec.m)
        throw invalid_input_error("check_variation_identities: p must lie in [0, m]");

    // Every R-value on either side comes from the direct oracle.
    const auto R = [&](int k, long upper) -> Rational {
        if (k == 0) return Rational(1);
        RecurrentSumSpec sub = spec.inner(k);
        sub.n = upper;
        return eval_naive(sub);
    };
    const auto a = [&](int k, long t) {
        return spec.seqs[static_cast<std::size_t>(k - 1)].eval(t);
    };

    const long n = spec.n;
    const Rational lhs = R(spec.m, n + 1);
    bool ok = true;

    // Basic step: R_{m,q,n+1} = a_{(m);n+1} R_{m-1,q,n+1} + R_{m,q,n}.
    if (spec.m >= 1)
        ok = ok && lhs == a(spec.m, n + 1) * R(spec.m - 1, n + 1) + R(spec.m, n);

    // Expanded variation: R_{m,q,n+1} = sum_k (prod of trailing a's) R_{k,q,n}.
    {
        Rational rhs(0);
        for (int k = 0; k <= spec.m; ++k) {
            Rational prod(1);
            for (int j = 0; j <= spec.m - k - 1; ++j) prod *= a(spec.m - j, n + 1);
            rhs += prod * R(k, n);
        }
        ok = ok && lhs == rhs;
    }

    // Horner form of the expanded variation. The nesting resolves as
    // val_1 = a_{(1);n+1} R_0 + R_{1,q,n}, then val_k = a_{(k);n+1} val_{k-1}
    // + R_{k,q,n} up to k = m, which Horner-factors the sum above.
    {
        Rational val(1);
        for (int k = 1; k <= spec.m; ++k) val = a(k, n + 1) * val + R(k, n);
        ok = ok && lhs == val;
    }

    // Pivot form: recurrent sums of order below p stay folded into
    // R_{p,q,n+1}.
    {
        Rational rhs(0);
        for (int k = p + 1; k <= spec.m; ++k) {
            Rational prod(1);
            for (int j = 0; j <= spec.m - k - 1; ++j) prod *= a(spec.m - j, n + 1);
            rhs += prod * R(k, n);
        }
        Rational prod(1);
        for (int j = 0; j <= spec.m - p - 1; ++j) prod *= a(spec.m - j, n + 1);
        rhs += prod * R(p, n + 1);
        ok = ok && lhs == rhs;
    }

    // Horner form of the pivot identity: seed with R_{p,q,n+1}.
    {
        Rational val = R(p, n + 1);
        for (int k = p + 1; k <= spec.m; ++k) val = a(k, n + 1) * val + R(k, n);
        ok = ok && lhs == val;
    }

    return ok;
}

} // namespace recsum
