#pragma once

#include <vector>

#include "recsum/partitions.hpp"
#include "recsum/rational.hpp"

namespace recsum {

/// Unsigned Stirling number of the first kind: the coefficient of x^r in the
/// rising factorial x(x+1)...(x+m-1). Computed by exact integer polynomial
/// expansion (row m is row m-1 multiplied by (x + m - 1)), cached, and grown
/// on demand. Requires 0 <= r <= m.
Integer stirling_first_unsigned(int m, int r);

/// Partial Bell polynomial B_{m,r}(x_1, ..., x_{m-r+1}):
///   m! * sum over length-r partitions of m of prod_i (1/y_i!) (x_i/i!)^{y_i}.
/// x is indexed from x_1; for 1 <= r <= m it must supply at least m-r+1
/// entries.
Rational partial_bell(int m, int r, const std::vector<Rational>& x);

/// Complete Bell polynomial B_m(x_1, ..., x_m) = sum_{r=0..m} B_{m,r}.
/// x must supply at least m entries.
Rational complete_bell(int m, const std::vector<Rational>& x);

/// Bernoulli numbers of the first kind (B_1 = -1/2), from the defining
/// recurrence sum_{k=0..n} C(n+1,k) B_k = 0. Cached, grown on demand.
Rational bernoulli(int j);

/// Sum over length-r partitions of m of prod_i 1/(i^{y_i} y_i!) equals
/// [m r] / m!. Both sides computed by structurally independent paths
/// (partition enumeration vs the Stirling table).
bool check_lemma_4_2(int m, int r);

/// Sum over all partitions of m of prod_i 1/(i^{y_i} y_i!) equals 1.
bool check_lemma_4_3(int m);

/// Weighted form of lemma 4.2: with phi a partition of some weight <= m and
/// r_phi its length,
///   sum over length-r partitions of m of prod_i C(y_i, phi_i)/(i^{y_i} y_i!)
///     = [m-phi, r-r_phi] / (m-phi)! * prod_i 1/(i^{phi_i} phi_i!),
/// where a Stirling number with lower index outside [0, m-phi] counts as 0.
/// Requires weight(phi) <= m.
bool check_lemma_4_4(int m, int r, const MultPartition& phi);

/// Weighted form of lemma 4.3: with phi a partition of some weight <= m,
///   sum over all partitions of m of prod_i C(y_i, phi_i)/(i^{y_i} y_i!)
///     = prod_i 1/(i^{phi_i} phi_i!).
/// Requires weight(phi) <= m.
bool check_lemma_4_5(int m, const MultPartition& phi);

/// sum over partitions of m of prod_i (1/y_i!) (n/i)^{y_i} = C(n+m-1, m).
bool check_corollary_4_2(int m, int n);

} // namespace recsum
