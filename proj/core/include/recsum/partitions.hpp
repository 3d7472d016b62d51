#pragma once

#include <string>
#include <vector>

#include "recsum/rational.hpp"

namespace recsum {

/// Partition of a non-negative integer m, stored as the multiplicity vector
/// (y_1, ..., y_m): y_i counts the parts equal to i. The vector always has
/// exactly m entries, trailing zeros included, so products over i = 1..m
/// iterate uniformly. For m = 0 the vector is empty.
class MultPartition {
public:
    /// Validates sum(i * y_i) == m and the fixed vector length.
    MultPartition(int m, std::vector<unsigned> multiplicities);

    /// The all-zeros-padded partition of 0 (the single partition of m = 0).
    static MultPartition empty() { return MultPartition(0, {}); }

    int m() const { return m_; }
    /// y_i, 1-based; zero outside [1, m].
    unsigned multiplicity(int i) const;
    const std::vector<unsigned>& multiplicities() const { return mult_; }

    /// Number of parts, r = sum(y_i).
    int length() const;
    /// Parts in descending order, e.g. {3, 1} for m = 4, y_1 = y_3 = 1.
    std::vector<int> parts() const;

    /// `3+1`, or `()` for the empty partition.
    std::string to_string() const;

    friend bool operator==(const MultPartition&, const MultPartition&) = default;

private:
    int m_;
    std::vector<unsigned> mult_;
};

/// Partition of the index set {1, ..., m} into non-empty disjoint blocks.
/// Canonical form: each block sorted ascending, blocks sorted by
/// (size, smallest element).
class SetPartition {
public:
    /// Validates disjointness and coverage of {1, ..., m}; canonicalizes.
    SetPartition(int m, std::vector<std::vector<int>> blocks);

    int m() const { return m_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// The class (cycle-type analogue): multiplicity vector of block sizes,
    /// always a valid MultPartition of m.
    MultPartition block_size_partition() const;

    /// `{1,2}|{3}`.
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    int m_;
    std::vector<std::vector<int>> blocks_;
};

/// All partitions of m as multiplicity vectors, exactly p(m) of them.
/// Deterministic order: by descending largest part, recursively — i.e.
/// lexicographically descending on (y_m, ..., y_1). enumerate_partitions(4)
/// yields {4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}.
std::vector<MultPartition> enumerate_partitions(int m);

/// The partitions of m with exactly r parts, in the same relative order as
/// enumerate_partitions(m). Empty when r > m or when r = 0 < m.
std::vector<MultPartition> enumerate_partitions_with_length(int m, int r);

/// p(m) via Euler's pentagonal-number recurrence, p(0) = 1 and p(k) = 0 for
/// k < 0; the series truncates once the pentagonal index exceeds m. Cached.
Integer partition_function(int m);

/// Largest part that can appear in a partition of m with exactly r parts:
/// m - r + 1. Requires 1 <= r <= m.
int largest_part_bound(int m, int r);

/// Maximum m accepted by enumerate_set_partitions (Bell(10) = 115975 set
/// partitions; beyond that memory grows with no benefit to any consumer).
inline constexpr int kSetPartitionGuard = 10;

/// All set partitions of {1, ..., m}, each exactly once, in lexicographic
/// order of their restricted-growth strings. Requires 1 <= m <= 10.
std::vector<SetPartition> enumerate_set_partitions(int m);

/// Number of set partitions of {1, ..., m} whose block-size multiset matches
/// the integer partition k:  m! / prod_i (i!^{y_i} * y_i!).
Integer set_partition_class_size(const MultPartition& k);

/// True iff every block of p is a subset of some block of rho. Both
/// partitions must be over the same ground set size.
bool refines(const SetPartition& p, const SetPartition& rho);

} // namespace recsum
