#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recsum/engine.hpp"

namespace recsum {

struct VerifyFailure {
    std::string key;    ///< canonical case key, e.g. "m=3;q=1;n=5;rep=2;p=1"
    std::string spec;   ///< full spec of the failing case
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int max_m = 0;
    int max_n = 0;
    std::uint64_t cases = 0;
    std::vector<VerifyFailure> failures;  ///< sorted by key

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    int max_m = 4;
    int max_n = 8;
    std::uint64_t seed = 1;
    /// Mutation-testing hook: deliberately corrupts one computed value in the
    /// first case so the harness must report at least one failure.
    bool poison = false;
};

/// Suites: variation, inversion, reduction, general, partition-identities,
/// faulhaber, basel-general.
const std::vector<std::string>& verify_suites();

/// Runs one suite. Deterministic: the same options produce the same report,
/// field for field. Unknown suite -> invalid_input_error.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);

/// One bench row. terms_touched is the method's dominant term count (tuples
/// for the direct evaluator, state updates for the incremental one,
/// partition terms for the reduced one — its power-sum updates are reported
/// separately). Wall time is informational only; cross-machine comparisons
/// should use the counters.
struct BenchRecord {
    std::string method;
    bool skipped = false;
    std::string skip_reason;
    Rational value;
    std::uint64_t terms_touched = 0;
    std::uint64_t ring_ops = 0;
    std::uint64_t power_sum_updates = 0;
    double wall_ms = 0.0;
};

/// Evaluates the spec with each named method (naive|incremental|reduced|
/// general) and returns one record per method. A method whose guard trips is
/// marked skipped and the others still run. All produced values are asserted
/// equal before returning (identity_check_error otherwise); `general` is
/// exempt because it computes the symmetrized sum, m! times the others when
/// all sequences agree — that scaling is what gets asserted instead.
std::vector<BenchRecord> run_bench(const RecurrentSumSpec& spec,
                                   const std::vector<std::string>& methods,
                                   std::optional<std::uint64_t> guard = std::nullopt);

/// Deterministic random tabulated sequence covering [q, n+1]: numerators
/// uniform in [-5, 5], denominators uniform in [1, 6], drawn from SplitMix64.
SeqSpec random_tabulated(std::uint64_t seed, long q, long n);

} // namespace recsum
