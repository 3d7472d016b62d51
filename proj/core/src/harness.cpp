#include "recsum/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>

#include "recsum/rng.hpp"
#include "recsum/special.hpp"
#include "recsum/zeta.hpp"

namespace recsum {

namespace {

class SuiteRun {
public:
    SuiteRun(std::string suite, const VerifyOptions& options) : poison_pending_(options.poison) {
        report_.suite = std::move(suite);
        report_.seed = options.seed;
        report_.max_m = options.max_m;
        report_.max_n = options.max_n;
    }

    /// Records one exact value comparison. The poison hook corrupts the
    /// computed lhs of the first case it sees.
    void expect_equal(const std::string& key, const std::string& spec, Rational lhs,
                      const Rational& rhs) {
        if (take_poison()) lhs += Rational(1);
        record(lhs == rhs, key, spec, lhs.to_string(), rhs.to_string());
    }

    void expect_equal(const std::string& key, const std::string& spec, PiPoly lhs,
                      const PiPoly& rhs) {
        if (take_poison()) lhs += PiPoly(Rational(1));
        record(lhs == rhs, key, spec, lhs.to_string(), rhs.to_string());
    }

    void expect_true(const std::string& key, const std::string& spec, bool ok) {
        if (take_poison()) ok = !ok;
        record(ok, key, spec, ok ? "true" : "false", "true");
    }

    VerifyReport finish() {
        std::sort(report_.failures.begin(), report_.failures.end(),
                  [](const VerifyFailure& a, const VerifyFailure& b) { return a.key < b.key; });
        return std::move(report_);
    }

private:
    bool take_poison() {
        const bool hit = poison_pending_;
        poison_pending_ = false;
        return hit;
    }

    void record(bool ok, const std::string& key, const std::string& spec, std::string lhs,
                std::string rhs) {
        ++report_.cases;
        if (!ok) report_.failures.push_back({key, spec, std::move(lhs), std::move(rhs)});
    }

    VerifyReport report_;
    bool poison_pending_;
};

std::string spec_summary(const RecurrentSumSpec& spec) {
    std::string out = "R(m=" + std::to_string(spec.m) + ",q=" + std::to_string(spec.q) +
                      ",n=" + std::to_string(spec.n) + ";";
    for (std::size_t k = 0; k < spec.seqs.size(); ++k) {
        if (k) out += ",";
        out += spec.seqs[k].to_string();
    }
    return out + ")";
}

std::vector<SeqSpec> draw_sequences(SplitMix64& master, int count, long q, long n) {
    std::vector<SeqSpec> seqs;
    seqs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) seqs.push_back(random_tabulated(master.next(), q, n));
    return seqs;
}

void run_reduction(SuiteRun& run, const VerifyOptions& opt) {
    SplitMix64 master(opt.seed);
    for (int m = 0; m <= opt.max_m; ++m)
        for (long q = 1; q <= 2; ++q)
            for (long n = q; n < q + opt.max_n; ++n)
                for (int rep = 0; rep < 20; ++rep) {
                    const auto spec =
                        RecurrentSumSpec::same(m, q, n, random_tabulated(master.next(), q, n));
                    const std::string key = "m=" + std::to_string(m) + ";q=" + std::to_string(q) +
                                            ";n=" + std::to_string(n) +
                                            ";rep=" + std::to_string(rep);
                    const Rational naive = eval_naive(spec);
                    run.expect_equal(key + ";pair=incremental", spec_summary(spec),
                                     eval_incremental(spec), naive);
                    run.expect_equal(key + ";pair=reduced", spec_summary(spec), eval_reduced(spec),
                                     naive);
                }
}

void run_variation(SuiteRun& run, const VerifyOptions& opt) {
    SplitMix64 master(opt.seed);
    for (int m = 0; m <= opt.max_m; ++m)
        for (long q = 1; q <= 2; ++q)
            for (long n = q; n < q + opt.max_n; ++n)
                for (int rep = 0; rep < 5; ++rep) {
                    const auto spec =
                        RecurrentSumSpec::of(q, n, draw_sequences(master, m, q, n));
                    for (int p = 0; p <= m; ++p) {
                        const std::string key = "m=" + std::to_string(m) +
                                                ";q=" + std::to_string(q) +
                                                ";n=" + std::to_string(n) +
                                                ";rep=" + std::to_string(rep) +
                                                ";p=" + std::to_string(p);
                        run.expect_true(key, spec_summary(spec),
                                        check_variation_identities(spec, p));
                    }
                }
}

void run_inversion(SuiteRun& run, const VerifyOptions& opt) {
    SplitMix64 master(opt.seed);
    for (int m = 0; m <= opt.max_m; ++m)
        for (long q = 1; q <= 2; ++q)
            for (long n = q; n < q + opt.max_n; ++n)
                for (int rep = 0; rep < 5; ++rep) {
                    const auto spec =
                        RecurrentSumSpec::of(q, n, draw_sequences(master, m, q, n));
                    const Rational naive = eval_naive(spec);
                    const std::string base = "m=" + std::to_string(m) + ";q=" + std::to_string(q) +
                                             ";n=" + std::to_string(n) +
                                             ";rep=" + std::to_string(rep);
                    run.expect_equal(base + ";mode=full", spec_summary(spec),
                                     eval_inverted(spec, InversionMode::Full), naive);
                    run.expect_equal(base + ";mode=rotate", spec_summary(spec),
                                     eval_inverted(spec, InversionMode::Rotate), naive);
                    for (int p = 0; p <= m; ++p) {
                        run.expect_equal(
                            base + ";mode=partial-invert;p=" + std::to_string(p),
                            spec_summary(spec),
                            eval_inverted(spec, InversionMode::PartialInvert, p), naive);
                        run.expect_equal(
                            base + ";mode=partial-rotate;p=" + std::to_string(p),
                            spec_summary(spec),
                            eval_inverted(spec, InversionMode::PartialRotate, p), naive);
                    }
                }
}

Rational symmetrized_naive(const RecurrentSumSpec& spec) {
    std::vector<std::size_t> order(spec.seqs.size());
    std::iota(order.begin(), order.end(), 0);
    Rational total(0);
    do {
        RecurrentSumSpec permuted = spec;
        for (std::size_t k = 0; k < order.size(); ++k) permuted.seqs[k] = spec.seqs[order[k]];
        total += eval_naive(permuted);
    } while (std::next_permutation(order.begin(), order.end()));
    return total;
}

void run_general(SuiteRun& run, const VerifyOptions& opt) {
    SplitMix64 master(opt.seed);
    for (int m = 0; m <= opt.max_m; ++m)
        for (long q = 1; q <= 2; ++q)
            for (long n = q; n < q + opt.max_n; ++n)
                for (int rep = 0; rep < 5; ++rep) {
                    const std::string base = "m=" + std::to_string(m) + ";q=" + std::to_string(q) +
                                             ";n=" + std::to_string(n) +
                                             ";rep=" + std::to_string(rep);
                    const auto distinct =
                        RecurrentSumSpec::of(q, n, draw_sequences(master, m, q, n));
                    run.expect_equal(base + ";kind=distinct", spec_summary(distinct),
                                     eval_general_reduced(distinct), symmetrized_naive(distinct));
                    const auto same =
                        RecurrentSumSpec::same(m, q, n, random_tabulated(master.next(), q, n));
                    run.expect_equal(base + ";kind=same", spec_summary(same),
                                     eval_general_reduced(same),
                                     Rational(factorial(static_cast<unsigned long>(m))) *
                                         eval_reduced(same));
                }
}

void run_partition_identities(SuiteRun& run, const VerifyOptions& opt) {
    for (int m = 0; m <= opt.max_m; ++m)
        for (int r = 0; r <= m; ++r)
            run.expect_true("lemma4.2;m=" + std::to_string(m) + ";r=" + std::to_string(r), "",
                            check_lemma_4_2(m, r));
    for (int m = 0; m <= opt.max_m + 2; ++m)
        run.expect_true("lemma4.3;m=" + std::to_string(m), "", check_lemma_4_3(m));
    const int deep = std::min(opt.max_m, 8);
    for (int m = 0; m <= deep; ++m)
        for (int w = 0; w <= m; ++w)
            for (const auto& phi : enumerate_partitions(w)) {
                for (int r = 0; r <= m; ++r)
                    run.expect_true("lemma4.4;m=" + std::to_string(m) + ";r=" + std::to_string(r) +
                                        ";phi=" + phi.to_string(),
                                    "", check_lemma_4_4(m, r, phi));
                run.expect_true("lemma4.5;m=" + std::to_string(m) + ";phi=" + phi.to_string(), "",
                                check_lemma_4_5(m, phi));
            }
    for (int m = 0; m <= std::min(opt.max_m, 8); ++m)
        for (int n = 0; n <= std::min(opt.max_m, 8); ++n)
            run.expect_true("corollary4.2;m=" + std::to_string(m) + ";n=" + std::to_string(n), "",
                            check_corollary_4_2(m, n));
}

void run_faulhaber(SuiteRun& run, const VerifyOptions& opt) {
    for (int m = 1; m <= std::min(opt.max_m, 4); ++m)
        for (int p = 0; p <= 3; ++p)
            for (long n = 1; n <= std::min(opt.max_n, 12); ++n) {
                const auto spec = RecurrentSumSpec::same(m, 1, n, SeqSpec::power(p));
                run.expect_equal("m=" + std::to_string(m) + ";p=" + std::to_string(p) +
                                     ";n=" + std::to_string(n),
                                 spec_summary(spec), recurrent_faulhaber(m, p, n),
                                 eval_naive(spec));
            }
    // Published closed forms.
    for (long n = 0; n <= 30; ++n) {
        const Rational nn(n);
        run.expect_equal("closed;m=2;p=1;n=" + std::to_string(n), "",
                         recurrent_faulhaber(2, 1, n),
                         nn * (nn + 1) * (nn + 2) * (Rational(3) * nn + 1) / Rational(24));
        run.expect_equal("closed;m=2;p=2;n=" + std::to_string(n), "",
                         recurrent_faulhaber(2, 2, n),
                         nn * (nn + 1) * (nn + 2) * (Rational(2) * nn + 1) *
                             (Rational(2) * nn + 3) * (Rational(5) * nn - 1) / Rational(360));
        run.expect_equal("closed;m=3;p=1;n=" + std::to_string(n), "",
                         recurrent_faulhaber(3, 1, n),
                         nn * nn * (nn + 1) * (nn + 1) * (nn + 2) * (nn + 3) / Rational(48));
    }
}

void run_basel_general(SuiteRun& run, const VerifyOptions& opt) {
    // Even zeta closed forms against the published table.
    const std::vector<std::string> table = {"1/6",           "1/90",        "1/945",
                                            "1/9450",        "1/93555",     "691/638512875",
                                            "2/18243225",    "3617/325641566250"};
    for (int m = 1; m <= 8; ++m) {
        const PiPoly expected = PiPoly::monomial(
            Rational::parse(table[static_cast<std::size_t>(m - 1)]), 2 * static_cast<unsigned>(m));
        run.expect_equal("zeta-even;m=" + std::to_string(m), "", zeta_even(m), expected);
    }
    // The generalized Basel identity, exact in the pi-polynomial ring.
    for (int m = 1; m <= std::max(6, std::min(opt.max_m, 8)); ++m)
        run.expect_equal("basel;m=" + std::to_string(m), "", recurrent_zeta_star_even(m, 1),
                         basel_general(m));
    // Sign-factored Bernoulli form against the production path.
    for (int m = 1; m <= 6; ++m)
        run.expect_equal("bernoulli-form;m=" + std::to_string(m), "",
                         recurrent_zeta_star_even_bernoulli_form(m, 1),
                         recurrent_zeta_star_even(m, 1));
    for (int m = 1; m <= 8; ++m)
        run.expect_true("bernoulli-partition;m=" + std::to_string(m), "",
                        bernoulli_partition_identity(m, 1));
    run.expect_true("numeric;m=4;p=1", "",
                    recurrent_zeta_star_even(4, 1).eval_numeric(10) == "1.992466004");
    // Convergence shape of the limit table (throws on violation).
    bool shape_ok = true;
    std::string shape_msg = "true";
    try {
        (void)basel_limit_table(8);
    } catch (const identity_check_error& e) {
        shape_ok = false;
        shape_msg = e.what();
    }
    run.expect_true("limit-table;max_m=8", shape_msg, shape_ok);
    // Truncation sanity: the tail of the order-1 sum at n=1000 is below 1/n.
    const auto trunc = truncated_zeta_star(1, 1, 1000);
    run.expect_true("truncation;m=1;p=1;n=1000", "abs_error=" + trunc.abs_error,
                    std::strtod(trunc.abs_error.c_str(), nullptr) < 1e-3);
}

} // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites = {
        "variation", "inversion",           "reduction", "general",
        "partition-identities", "faulhaber", "basel-general"};
    return suites;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
    if (options.max_m < 0 || options.max_n < 1)
        throw invalid_input_error("run_verify: max_m must be >= 0 and max_n >= 1");
    SuiteRun run(suite, options);
    if (suite == "variation")
        run_variation(run, options);
    else if (suite == "inversion")
        run_inversion(run, options);
    else if (suite == "reduction")
        run_reduction(run, options);
    else if (suite == "general")
        run_general(run, options);
    else if (suite == "partition-identities")
        run_partition_identities(run, options);
    else if (suite == "faulhaber")
        run_faulhaber(run, options);
    else if (suite == "basel-general")
        run_basel_general(run, options);
    else
        throw invalid_input_error("unknown verify suite '" + suite + "'");
    return run.finish();
}

SeqSpec random_tabulated(std::uint64_t seed, long q, long n) {
    SplitMix64 rng(seed);
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n - q + 2));
    for (long N = q; N <= n + 1; ++N)
        values.emplace_back(rng.next_in(-5, 5), rng.next_in(1, 6));
    return SeqSpec::tabulated(std::move(values), q);
}

std::vector<BenchRecord> run_bench(const RecurrentSumSpec& spec,
                                   const std::vector<std::string>& methods,
                                   std::optional<std::uint64_t> guard) {
    spec.validate();
    std::vector<BenchRecord> records;
    for (const auto& method : methods) {
        BenchRecord rec;
        rec.method = method;
        EvalStats stats;
        const auto started = std::chrono::steady_clock::now();
        try {
            if (method == "naive") {
                rec.value = eval_naive(spec, &stats, guard);
            } else if (method == "incremental") {
                rec.value = eval_incremental(spec, &stats);
                if (stats.terms_touched == 0) stats.terms_touched = 1;
            } else if (method == "reduced") {
                rec.value = eval_reduced(spec, &stats);
            } else if (method == "general") {
                rec.value = eval_general_reduced(spec, &stats);
            } else {
                throw invalid_input_error("unknown bench method '" + method + "'");
            }
        } catch (const resource_guard_error& e) {
            rec.skipped = true;
            rec.skip_reason = e.what();
        } catch (const invalid_input_error& e) {
            if (method == "reduced" && !spec.all_same()) {
                rec.skipped = true;
                rec.skip_reason = e.what();
            } else {
                throw;
            }
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
        rec.terms_touched = stats.terms_touched;
        rec.ring_ops = stats.ring_ops;
        rec.power_sum_updates = stats.power_sum_updates;
        records.push_back(std::move(rec));
    }

    // Cross-method value agreement. The general method computes the
    // symmetrized sum, so for identical sequences it must be m! times the
    // others; for distinct sequences it is a different quantity and the
    // verify suite owns that comparison.
    const Rational* reference = nullptr;
    for (const auto& rec : records) {
        if (rec.skipped || rec.method == "general") continue;
        if (!reference) {
            reference = &rec.value;
        } else if (!(rec.value == *reference)) {
            throw identity_check_error("bench: method '" + rec.method +
                                       "' disagrees with the reference value");
        }
    }
    if (spec.all_same())
        for (const auto& rec : records)
            if (!rec.skipped && rec.method == "general" && reference &&
                !(rec.value ==
                  Rational(factorial(static_cast<unsigned long>(spec.m))) * *reference))
                throw identity_check_error("bench: general reduction is not m! times the sum");
    return records;
}

} // namespace recsum
