#pragma once

#include <string>
#include <vector>

#include "recsum/engine.hpp"
#include "recsum/pi_poly.hpp"
#include "recsum/rational.hpp"

namespace recsum {

/// sum_{N=1..n} N^p, exactly, via the Bernoulli closed form
///   (1/(p+1)) sum_{j=0..p} (-1)^j C(p+1,j) B_j n^{p+1-j}.
Rational faulhaber_sum(long n, int p);

/// Recurrent power sum of order m: the partition expansion evaluated with
/// power sums S_i = faulhaber_sum(n, i*p). Equals the direct nested sum of
/// N^p over non-decreasing index tuples.
Rational recurrent_faulhaber(int m, int p, long n);

/// zeta(2m) as an exact single-term pi-polynomial,
///   (-1)^{m+1} 2^{2m-1} B_{2m} / (2m)!  *  pi^{2m}.
/// Requires m >= 1 (odd and zero arguments have no closed form in scope).
PiPoly zeta_even(int m);

/// The order-m recurrent even zeta-star value with common exponent 2p:
/// the partition expansion evaluated with S_i = zeta(2ip) in exact
/// pi-polynomial arithmetic. Always a single term with exponent 2pm.
PiPoly recurrent_zeta_star_even(int m, int p);

/// The Bernoulli-factored form of the same value:
///   (-1)^{pm} (2 pi)^{2pm} * sum over partitions of m of
///   prod_i ((-1)^{y_i}/y_i!) (B_{2ip}/((2i)(2ip)!))^{y_i}.
/// Kept separate from the production path above because its sign bookkeeping
/// is easy to mis-transcribe; the two are validated against each other.
PiPoly recurrent_zeta_star_even_bernoulli_form(int m, int p);

/// The generalized Basel value (2 - 2^{-(2m-2)}) zeta(2m), exact. Reduces to
/// the classic Basel value at m = 1 and equals recurrent_zeta_star_even(m, 1).
PiPoly basel_general(int m);

/// Checks sum over partitions of m of prod_i ((-1)^{y_i}/y_i!)
/// (B_{2ip}/((2i)(2ip)!))^{y_i} == (2^{1-2m} - 1) B_{2m}/(2m)!, exactly.
/// The identity is established at p = 1 only; calls with p > 1 report the
/// comparison outcome but nothing asserts them.
bool bernoulli_partition_identity(int m, int p);

/// Finite truncation of the recurrent even zeta-star sum versus its closed
/// form.
struct TruncationReport {
    long n = 0;
    Rational partial;    ///< direct sum over tuples bounded by n
    PiPoly target;       ///< the exact closed form
    std::string abs_error;  ///< |numeric(partial) - numeric(target)|
};

/// Evaluates the order-m sum of 1/N^{2p} directly up to n (subject to the
/// naive tuple guard) and reports the distance to the closed form.
/// `digits` controls the significant digits of the reported error.
TruncationReport truncated_zeta_star(int m, int p, long n, unsigned digits = 12);

struct BaselRow {
    int m = 0;
    PiPoly value;
    std::string numeric;  ///< decimal rendering of the value
    double approx = 0.0;
};

/// basel_general(m) for m = 1..max_m with numeric renderings. Verifies the
/// convergence shape — every value lies in [1, 2) and |value - 2| strictly
/// decreases — and throws identity_check_error otherwise. (The order-0 term
/// of the divergent series over m equals 1 by the order-0 convention.)
std::vector<BaselRow> basel_limit_table(int max_m);

} // namespace recsum
