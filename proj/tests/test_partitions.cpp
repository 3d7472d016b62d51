#include <doctest.h>

#include <algorithm>
#include <set>

#include "recsum/partitions.hpp"

using namespace recsum;

TEST_SUITE_BEGIN("partitions");

namespace {

MultPartition mp(int m, std::vector<unsigned> mult) { return MultPartition(m, std::move(mult)); }

} // namespace

TEST_CASE("multiplicity vectors validate their defining constraint") {
    CHECK_NOTHROW(mp(4, {1, 0, 1, 0}));
    CHECK_THROWS_AS(mp(4, {1, 0, 1}), invalid_input_error);     // wrong length
    CHECK_THROWS_AS(mp(4, {0, 0, 1, 0}), invalid_input_error);  // weight 3 != 4
    CHECK(MultPartition::empty().m() == 0);
    CHECK(mp(4, {1, 0, 1, 0}).length() == 2);
    CHECK(mp(4, {1, 0, 1, 0}).parts() == std::vector<int>{3, 1});
    CHECK(mp(4, {1, 0, 1, 0}).to_string() == "3+1");
    CHECK(MultPartition::empty().to_string() == "()");
}

TEST_CASE("enumeration of m=4 in descending-largest-part order") {
    const auto got = enumerate_partitions(4);
    const std::vector<MultPartition> expected = {
        mp(4, {0, 0, 0, 1}), mp(4, {1, 0, 1, 0}), mp(4, {0, 2, 0, 0}),
        mp(4, {2, 1, 0, 0}), mp(4, {4, 0, 0, 0})};
    CHECK(got == expected);
}

TEST_CASE("enumeration edge cases") {
    CHECK(enumerate_partitions(0) == std::vector<MultPartition>{MultPartition::empty()});
    CHECK(enumerate_partitions(1) == std::vector<MultPartition>{mp(1, {1})});
    CHECK(enumerate_partitions(5).size() == 7);
    CHECK_THROWS_AS(enumerate_partitions(-1), invalid_input_error);
}

TEST_CASE("every enumerated vector satisfies the constraint, with no duplicates") {
    for (int m = 0; m <= 14; ++m) {
        const auto list = enumerate_partitions(m);
        std::set<std::vector<unsigned>> seen;
        for (const auto& p : list) {
            long long weight = 0;
            for (int i = 1; i <= m; ++i) weight += static_cast<long long>(i) * p.multiplicity(i);
            CHECK(weight == m);
            CHECK(seen.insert(p.multiplicities()).second);
        }
    }
}

TEST_CASE("length-restricted enumeration matches the filtered full enumeration") {
    CHECK(enumerate_partitions_with_length(4, 2) ==
          std::vector<MultPartition>{mp(4, {1, 0, 1, 0}), mp(4, {0, 2, 0, 0})});
    CHECK(enumerate_partitions_with_length(4, 5).empty());
    CHECK(enumerate_partitions_with_length(3, 0).empty());
    CHECK(enumerate_partitions_with_length(0, 0) ==
          std::vector<MultPartition>{MultPartition::empty()});
    CHECK(enumerate_partitions_with_length(0, 1).empty());
    for (int m = 0; m <= 12; ++m)
        for (int r = 0; r <= m + 1; ++r) {
            std::vector<MultPartition> filtered;
            for (const auto& p : enumerate_partitions(m))
                if (p.length() == r) filtered.push_back(p);
            CHECK(enumerate_partitions_with_length(m, r) == filtered);
        }
}

TEST_CASE("partition function matches enumeration and known values") {
    CHECK(partition_function(0) == 1);
    CHECK(partition_function(5) == 7);
    CHECK(partition_function(100) == Integer("190569292"));
    for (int m = 0; m <= 25; ++m)
        CHECK(partition_function(m) == Integer(static_cast<unsigned long>(enumerate_partitions(m).size())));
    CHECK_THROWS_AS(partition_function(-3), invalid_input_error);
}

TEST_CASE("largest part bound") {
    CHECK(largest_part_bound(6, 2) == 5);
    CHECK(largest_part_bound(6, 1) == 6);
    CHECK(largest_part_bound(6, 6) == 1);
    CHECK_THROWS_AS(largest_part_bound(6, 0), invalid_input_error);
    CHECK_THROWS_AS(largest_part_bound(6, 7), invalid_input_error);
    for (int m = 1; m <= 12; ++m)
        for (int r = 1; r <= m; ++r) {
            const int bound = largest_part_bound(m, r);
            for (const auto& p : enumerate_partitions_with_length(m, r))
                for (int i = bound + 1; i <= m; ++i) CHECK(p.multiplicity(i) == 0);
        }
}

TEST_CASE("set partitions of small ground sets") {
    const auto three = enumerate_set_partitions(3);
    REQUIRE(three.size() == 5);
    CHECK(three[0] == SetPartition(3, {{1, 2, 3}}));
    CHECK(std::count(three.begin(), three.end(), SetPartition(3, {{1, 2}, {3}})) == 1);
    CHECK(std::count(three.begin(), three.end(), SetPartition(3, {{1, 3}, {2}})) == 1);
    CHECK(std::count(three.begin(), three.end(), SetPartition(3, {{2, 3}, {1}})) == 1);
    CHECK(std::count(three.begin(), three.end(), SetPartition(3, {{1}, {2}, {3}})) == 1);

    CHECK(enumerate_set_partitions(1) == std::vector<SetPartition>{SetPartition(1, {{1}})});
    CHECK(enumerate_set_partitions(4).size() == 15);

    // Bell numbers through m=8.
    const std::vector<std::size_t> bell = {1, 2, 5, 15, 52, 203, 877, 4140};
    for (int m = 1; m <= 8; ++m)
        CHECK(enumerate_set_partitions(m).size() == bell[static_cast<std::size_t>(m - 1)]);

    CHECK_THROWS_AS(enumerate_set_partitions(0), invalid_input_error);
    CHECK_THROWS_AS(enumerate_set_partitions(11), invalid_input_error);
}

TEST_CASE("set partition canonical form and validation") {
    const SetPartition p(4, {{4, 2}, {3, 1}});
    CHECK(p.to_string() == "{1,3}|{2,4}");
    CHECK(p.block_size_partition() == mp(4, {0, 2, 0, 0}));
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), invalid_input_error);          // misses 3
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), invalid_input_error);  // overlap
    CHECK_THROWS_AS(SetPartition(3, {{1, 2, 3}, {}}), invalid_input_error);   // empty block
    CHECK_THROWS_AS(SetPartition(3, {{1, 2, 4}}), invalid_input_error);       // out of range
}

TEST_CASE("class sizes count the enumerated set partitions") {
    CHECK(set_partition_class_size(mp(3, {1, 1, 0})) == 3);
    CHECK(set_partition_class_size(mp(3, {0, 0, 1})) == 1);
    for (int m = 1; m <= 8; ++m) {
        const auto sets = enumerate_set_partitions(m);
        Integer total = 0;
        for (const auto& k : enumerate_partitions(m)) {
            const Integer size = set_partition_class_size(k);
            const auto matching = static_cast<Integer>(static_cast<unsigned long>(
                std::count_if(sets.begin(), sets.end(), [&](const SetPartition& sp) {
                    return sp.block_size_partition() == k;
                })));
            CHECK(size == matching);
            total += size;
        }
        CHECK(total == Integer(static_cast<unsigned long>(sets.size())));
    }
}

TEST_CASE("refinement examples") {
    const SetPartition singletons(3, {{1}, {2}, {3}});
    const SetPartition pair(3, {{1, 2}, {3}});
    const SetPartition whole(3, {{1, 2, 3}});
    const SetPartition other(3, {{1, 3}, {2}});
    CHECK(refines(singletons, pair));
    CHECK_FALSE(refines(pair, singletons));
    CHECK(refines(other, whole));
    CHECK(refines(whole, whole));
    CHECK_FALSE(refines(pair, other));
    CHECK_THROWS_AS(refines(pair, SetPartition(4, {{1, 2, 3, 4}})), invalid_input_error);
}

TEST_CASE("refinement is a partial order (exhaustive through m=5)") {
    for (int m = 1; m <= 5; ++m) {
        const auto all = enumerate_set_partitions(m);
        for (const auto& a : all) {
            CHECK(refines(a, a));
            for (const auto& b : all) {
                if (refines(a, b) && refines(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
            }
        }
    }
}

TEST_SUITE_END();
