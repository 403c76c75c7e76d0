#pragma once

/* Blockwise refinement at p = 2.  Strict partitions of n fall into
 * groups labelled by their abacus stalemate; the stalemates with r
 * nodes are exactly the unfoldings of the staircases, so a group label
 * is the staircase index m with r = m(m+1)/2 and n - r even, of weight
 * w = (n - r)/2.  Each group's divisor exponents can also be counted
 * directly from the even parts alone, which gives the closed formula
 * checked against the enumeration in the tests.
 */

#include <optional>

#include "cartan/divisors.hpp"
#include "cartan/habacus.hpp"

namespace cartan {

inline std::uint64_t triangular(unsigned m) { return std::uint64_t(m) * (m + 1) / 2; }

inline std::optional<unsigned> staircase_index(std::uint64_t nodes) {
    for (unsigned m = 0; triangular(m) <= nodes; ++m)
        if (triangular(m) == nodes)
            return m;
    return std::nullopt;
}

struct two_core_result {
    partition core;
    std::uint64_t weight = 0;
};

/* First-column hook residues via beta numbers on two runners: take the
 * beta set {lam_i + l - i}, slide each runner's beads down to the
 * bottom, and read the resulting partition back off. */
inline two_core_result two_core(const partition& lam) {
    const auto& parts = lam.parts();
    const std::size_t l = parts.size();
    std::size_t on_even = 0, on_odd = 0;
    for (std::size_t i = 0; i < l; ++i) {
        const std::uint64_t beta = std::uint64_t(parts[i]) + (l - 1 - i);
        ++(beta % 2 == 0 ? on_even : on_odd);
    }
    std::vector<std::uint64_t> betas;
    betas.reserve(l);
    for (std::size_t j = 0; j < on_even; ++j)
        betas.push_back(2 * j);
    for (std::size_t j = 0; j < on_odd; ++j)
        betas.push_back(2 * j + 1);
    std::sort(betas.begin(), betas.end(), std::greater<>());
    std::vector<unsigned> core_parts;
    for (std::size_t i = 0; i < l; ++i) {
        const std::uint64_t part = betas[i] - (l - 1 - i);
        if (part == 0)
            break;
        core_parts.push_back(unsigned(part));
    }
    two_core_result res{partition(std::move(core_parts)), 0};
    res.weight = (lam.sum() - res.core.sum()) / 2;
    return res;
}

struct parity_split {
    partition odd_parts;
    partition even_half;  // the even parts, each divided by two
};

inline parity_split split_by_parity(const partition& lam) {
    std::vector<unsigned> odd, half;
    for (unsigned v : lam.parts()) {
        if (v % 2 == 1)
            odd.push_back(v);
        else
            half.push_back(v / 2);
    }
    return {partition(std::move(odd)), partition(std::move(half))};
}

inline partition merge_parity_split(const parity_split& s) {
    std::vector<unsigned> parts;
    parts.reserve(s.odd_parts.length() + s.even_half.length());
    for (unsigned v : s.even_half.parts())
        parts.push_back(2 * v);
    std::vector<unsigned> merged(parts.size() + s.odd_parts.length());
    std::merge(parts.begin(), parts.end(), s.odd_parts.parts().begin(),
               s.odd_parts.parts().end(), merged.begin(), std::greater<>());
    return partition(std::move(merged));
}

inline std::vector<partition> strict_with_2weight(std::uint64_t n, std::uint64_t w) {
    std::vector<partition> out;
    for_each_partition(n, restriction::strict, 2, [&](const partition& lam) {
        if (two_core(lam).weight == w)
            out.push_back(lam);
    });
    return out;
}

inline std::vector<partition> strict_with_hweight(std::uint64_t n, std::uint64_t w) {
    std::vector<partition> out;
    for_each_partition(n, restriction::strict, 2, [&](const partition& lam) {
        if (h_core(lam).weight == w)
            out.push_back(lam);
    });
    return out;
}

struct block_label {
    unsigned index = 0;       // staircase index m
    std::uint64_t nodes = 0;  // m(m+1)/2, the size of both cores
    std::uint64_t weight = 0;

    partition core_2() const { return staircase(index); }
    partition core_h() const { return unfold(staircase(index)); }
    bool operator==(const block_label&) const = default;
};

/* All block labels for n, smallest staircase first. */
inline std::vector<block_label> block_labels(std::uint64_t n) {
    std::vector<block_label> out;
    for (unsigned m = 0; triangular(m) <= n; ++m)
        if ((n - triangular(m)) % 2 == 0)
            out.push_back({m, triangular(m), (n - triangular(m)) / 2});
    return out;
}

/* Divisor exponents contributed by the strict partitions of n whose
 * stalemate is unfold(staircase(m)). */
inline divisor_multiset block_divisors(std::uint64_t n, unsigned m) {
    if (triangular(m) > n || (n - triangular(m)) % 2 != 0)
        throw std::invalid_argument("n has no block with staircase index " + std::to_string(m));
    const partition target = unfold(staircase(m));
    divisor_multiset out;
    for_each_partition(n, restriction::strict, 2, [&](const partition& lam) {
        if (h_core(lam).core == target)
            out.add(divisor_exponent(lam, 2));
    });
    return out;
}

/* Number of strict partitions of k whose e-invariant at 2 equals i. */
inline std::uint64_t count_strict_with_e(std::uint64_t i, std::uint64_t k) {
    std::uint64_t count = 0;
    for_each_partition(k, restriction::strict, 2, [&](const partition& mu) {
        if (e_invariant(mu, 2) == i)
            ++count;
    });
    return count;
}

/* Closed-form multiplicity of exponent i in a block of weight w: a
 * strict partition splits into even parts (which fix the exponent) and
 * odd parts (which fix the stalemate), so the exponent-i partitions of
 * weight w are counted by summing over the even contribution k. */
inline big_int weight_block_multiplicity(std::uint64_t i, std::uint64_t w) {
    const auto p = partition_numbers(w / 2);
    big_int total = 0;
    for (std::uint64_t k = w % 2; k <= w; k += 2)
        total += big_int(count_strict_with_e(i, k)) * p[(w - k) / 2];
    return total;
}

struct weight_count_row {
    std::uint64_t w = 0;
    bool feasible = false;  // n - 2w is a triangular number
    std::uint64_t by_two_core = 0;
    std::uint64_t by_h_core = 0;
    big_int expected = 0;
    bool ok = false;
};

/* Per-weight census of the strict partitions of n: counting by abacus
 * weight must agree with counting by two-runner core weight, and both
 * must equal p(w) whenever the weight is feasible at all. */
inline std::vector<weight_count_row> weight_count_report(std::uint64_t n) {
    std::vector<std::uint64_t> by_two(n / 2 + 1, 0), by_h(n / 2 + 1, 0);
    for_each_partition(n, restriction::strict, 2, [&](const partition& lam) {
        ++by_two[two_core(lam).weight];
        ++by_h[h_core(lam).weight];
    });
    const auto p = partition_numbers(n / 2);
    std::vector<weight_count_row> rows;
    for (std::uint64_t w = 0; w <= n / 2; ++w) {
        weight_count_row row{w, staircase_index(n - 2 * w).has_value(), by_two[w], by_h[w], 0,
                             false};
        row.expected = row.feasible ? p[w] : 0;
        row.ok = row.by_two_core == row.by_h_core && big_int(row.by_two_core) == row.expected;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cartan
