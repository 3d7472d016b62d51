#include "recsum/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace recsum {

MultPartition::MultPartition(int m, std::vector<unsigned> multiplicities)
    : m_(m), mult_(std::move(multiplicities)) {
    if (m < 0) throw invalid_input_error("partition: m must be non-negative");
    if (mult_.size() != static_cast<std::size_t>(m))
        throw invalid_input_error("partition: multiplicity vector must have exactly m entries");
    long long weight = 0;
    for (int i = 1; i <= m; ++i) weight += static_cast<long long>(i) * mult_[i - 1];
    if (weight != m)
        throw invalid_input_error("partition: sum(i*y_i) != m");
}

unsigned MultPartition::multiplicity(int i) const {
    if (i < 1 || i > m_) return 0;
    return mult_[i - 1];
}

int MultPartition::length() const {
    return static_cast<int>(std::accumulate(mult_.begin(), mult_.end(), 0u));
}

std::vector<int> MultPartition::parts() const {
    std::vector<int> out;
    for (int i = m_; i >= 1; --i)
        for (unsigned c = 0; c < mult_[i - 1]; ++c) out.push_back(i);
    return out;
}

std::string MultPartition::to_string() const {
    const auto ps = parts();
    if (ps.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += "+";
        out += std::to_string(ps[i]);
    }
    return out;
}

SetPartition::SetPartition(int m, std::vector<std::vector<int>> blocks)
    : m_(m), blocks_(std::move(blocks)) {
    if (m < 1) throw invalid_input_error("set partition: m must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    std::size_t count = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw invalid_input_error("set partition: empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > m || seen[static_cast<std::size_t>(e)])
                throw invalid_input_error("set partition: blocks must partition {1..m}");
            seen[static_cast<std::size_t>(e)] = true;
            ++count;
        }
    }
    if (count != static_cast<std::size_t>(m))
        throw invalid_input_error("set partition: blocks must cover {1..m}");
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
}

MultPartition SetPartition::block_size_partition() const {
    std::vector<unsigned> mult(static_cast<std::size_t>(m_), 0);
    for (const auto& block : blocks_) ++mult[block.size() - 1];
    return MultPartition(m_, std::move(mult));
}

std::string SetPartition::to_string() const {
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += "|";
        out += "{";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(blocks_[b][i]);
        }
        out += "}";
    }
    return out;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<unsigned>& mult, int parts_used,
                   int target_length, bool constrain_length,
                   std::vector<MultPartition>& out, int m) {
    if (remaining == 0) {
        if (!constrain_length || parts_used == target_length)
            out.emplace_back(m, mult);
        return;
    }
    if (constrain_length) {
        // Prune: need at least ceil(remaining/max_part) more parts and at
        // most `remaining` more (all ones).
        const int left = target_length - parts_used;
        if (left <= 0 || remaining > left * max_part || remaining < left) return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        ++mult[p - 1];
        enumerate_rec(remaining - p, p, mult, parts_used + 1, target_length, constrain_length,
                      out, m);
        --mult[p - 1];
    }
}

} // namespace

std::vector<MultPartition> enumerate_partitions(int m) {
    if (m < 0) throw invalid_input_error("enumerate_partitions: m must be non-negative");
    std::vector<MultPartition> out;
    if (m == 0) {
        out.push_back(MultPartition::empty());
        return out;
    }
    std::vector<unsigned> mult(static_cast<std::size_t>(m), 0);
    enumerate_rec(m, m, mult, 0, 0, false, out, m);
    return out;
}

std::vector<MultPartition> enumerate_partitions_with_length(int m, int r) {
    if (m < 0 || r < 0)
        throw invalid_input_error("enumerate_partitions_with_length: m, r must be non-negative");
    std::vector<MultPartition> out;
    if (m == 0) {
        if (r == 0) out.push_back(MultPartition::empty());
        return out;
    }
    if (r == 0 || r > m) return out;
    std::vector<unsigned> mult(static_cast<std::size_t>(m), 0);
    enumerate_rec(m, m, mult, 0, r, true, out, m);
    return out;
}

Integer partition_function(int m) {
    if (m < 0) throw invalid_input_error("partition_function: m must be non-negative");
    static std::mutex mu;
    static std::vector<Integer> cache{1};  // p(0) = 1
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= static_cast<std::size_t>(m)) {
        const int n = static_cast<int>(cache.size());
        Integer value = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > n) break;
            const int sign = (j % 2 == 1) ? 1 : -1;
            Integer contrib = cache[n - g1];
            if (g2 <= n) contrib += cache[n - g2];
            value += sign * contrib;
        }
        cache.push_back(value);
    }
    return cache[static_cast<std::size_t>(m)];
}

int largest_part_bound(int m, int r) {
    if (m < 1 || r < 1 || r > m)
        throw invalid_input_error("largest_part_bound: requires 1 <= r <= m");
    return m - r + 1;
}

std::vector<SetPartition> enumerate_set_partitions(int m) {
    if (m < 1 || m > kSetPartitionGuard)
        throw invalid_input_error("enumerate_set_partitions: requires 1 <= m <= " +
                                  std::to_string(kSetPartitionGuard));
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]),
    // iterated in lexicographic order.
    std::vector<SetPartition> out;
    std::vector<int> a(static_cast<std::size_t>(m), 0);
    const auto emit = [&] {
        const int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
        for (int i = 0; i < m; ++i) blocks[a[static_cast<std::size_t>(i)]].push_back(i + 1);
        out.emplace_back(m, std::move(blocks));
    };
    while (true) {
        emit();
        int i = m - 1;
        for (; i >= 1; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[static_cast<std::size_t>(j)]);
            if (a[static_cast<std::size_t>(i)] <= prefix_max) break;
        }
        if (i < 1) return out;
        ++a[static_cast<std::size_t>(i)];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
}

Integer set_partition_class_size(const MultPartition& k) {
    Integer denom = 1;
    for (int i = 1; i <= k.m(); ++i) {
        const unsigned y = k.multiplicity(i);
        if (y == 0) continue;
        Integer fac_i = factorial(static_cast<unsigned long>(i));
        Integer fac_pow;
        mpz_pow_ui(fac_pow.get_mpz_t(), fac_i.get_mpz_t(), y);
        denom *= fac_pow * factorial(y);
    }
    return factorial(static_cast<unsigned long>(k.m())) / denom;
}

bool refines(const SetPartition& p, const SetPartition& rho) {
    if (p.m() != rho.m())
        throw invalid_input_error("refines: partitions are over different ground sets");
    std::vector<int> owner(static_cast<std::size_t>(rho.m()) + 1, -1);
    for (std::size_t b = 0; b < rho.blocks().size(); ++b)
        for (int e : rho.blocks()[b]) owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
    for (const auto& block : p.blocks()) {
        const int target = owner[static_cast<std::size_t>(block.front())];
        for (int e : block)
            if (owner[static_cast<std::size_t>(e)] != target) return false;
    }
    return true;
}

} // namespace recsum
