#pragma once

/* Cross-validation checks.  Every identity the library computes one way
 * is recomputed here by an independent route; each check returns the
 * first counterexample it finds, formatted for direct display.
 */

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cartan/blocks.hpp"

namespace cartan::checks {

struct check_result {
    bool ok = true;
    std::string detail;
};

namespace detail {

template <class... Ts>
std::string cat(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

inline check_result fail(std::string detail) { return {false, std::move(detail)}; }

}  // namespace detail

/* The part-splitting map is a bijection from p-regular to p-class-regular
 * partitions of n, with the documented inverse. */
inline check_result glaisher_bijection(std::uint64_t n, unsigned p) {
    using detail::cat, detail::fail;
    const auto regular = enumerate(n, restriction::p_regular, p);
    const auto class_regular = enumerate(n, restriction::p_class_regular, p);
    if (regular.size() != class_regular.size())
        return fail(cat("n=", n, " p=", p, ": ", regular.size(), " regular vs ",
                        class_regular.size(), " class-regular partitions"));
    std::set<partition> image;
    for (const auto& lam : regular) {
        const partition img = glaisher_map(lam, p);
        if (img.sum() != lam.sum() || !is_p_class_regular(img, p))
            return fail(cat("n=", n, " p=", p, ": image of (", lam.to_string(),
                            ") is not class-regular: (", img.to_string(), ")"));
        if (!image.insert(img).second)
            return fail(cat("n=", n, " p=", p, ": image collision at (", img.to_string(), ")"));
        const partition back = glaisher_inverse(img, p);
        if (back != lam)
            return fail(cat("n=", n, " p=", p, ": round trip (", lam.to_string(), ") -> (",
                            img.to_string(), ") -> (", back.to_string(), ")"));
    }
    return {};
}

/* Divisor multiset from the length formula vs the centralizer valuations. */
inline check_result divisor_oracle_match(std::uint64_t n, unsigned p) {
    const auto direct = cartan_divisors(n, p);
    const auto oracle = oracle_divisors(n, p);
    if (direct != oracle)
        return detail::fail(detail::cat("n=", n, " p=", p, ": ", direct.to_string(),
                                        " by length formula vs ", oracle.to_string(),
                                        " by centralizer valuation"));
    return {};
}

/* divisor_exponent agrees with the per-part sum over p-power exponents. */
inline check_result exponent_closed_form(std::uint64_t n, unsigned p) {
    for (const auto& lam : enumerate(n, restriction::p_regular, p)) {
        std::uint64_t expected = 0;
        for (const auto& piece : split_parts(lam, p)) {
            std::uint64_t term = 0, pw = 1;
            for (unsigned j = 0; j < piece.exponent; ++j) {
                term += pw;
                pw *= p;
            }
            expected += term;
        }
        if (divisor_exponent(lam, p) != expected)
            return detail::fail(detail::cat("n=", n, " p=", p, ": (", lam.to_string(),
                                            ") exponent ", divisor_exponent(lam, p),
                                            " vs per-part sum ", expected));
    }
    return {};
}

/* e_invariant(lam) equals the divisor exponent of the p-scaled partition. */
inline check_result e_invariant_scaling(std::uint64_t n, unsigned p) {
    for (const auto& lam : enumerate(n, restriction::p_regular, p)) {
        const std::uint64_t e = e_invariant(lam, p);
        const std::uint64_t scaled = divisor_exponent(scale(lam, p), p);
        if (e != scaled)
            return detail::fail(detail::cat("n=", n, " p=", p, ": e(", lam.to_string(), ")=", e,
                                            " but scaled exponent is ", scaled));
    }
    return {};
}

/* Random move orders all reach the canonical stalemate and weight. */
inline check_result abacus_confluence(std::uint64_t n, unsigned trials, std::uint64_t seed) {
    using detail::cat, detail::fail;
    std::mt19937_64 rng(seed ^ (n * 0x9e3779b97f4a7c15ULL));
    for (const auto& lam : enumerate(n, restriction::strict, 2)) {
        const auto canon = h_core(lam);
        if (!matches_stalemate_form(canon.core))
            return fail(cat("n=", n, ": stalemate (", canon.core.to_string(),
                            ") of (", lam.to_string(), ") is outside the closed-form family"));
        for (unsigned t = 0; t < trials; ++t) {
            abacus_state s = abacus_state::from_partition(lam);
            std::uint64_t w = 0;
            for (;;) {
                const auto moves = legal_moves(s);
                if (moves.empty())
                    break;
                const auto& mv = moves[rng() % moves.size()];
                s = apply_move(s, mv);
                w += mv.weight();
            }
            if (s.to_partition() != canon.core || w != canon.weight)
                return fail(cat("n=", n, ": (", lam.to_string(), ") reached (",
                                s.to_partition().to_string(), ") weight ", w,
                                " on a random order but (", canon.core.to_string(), ") weight ",
                                canon.weight, " canonically"));
        }
    }
    return {};
}

/* A strict partition is a stalemate iff it matches the closed form. */
inline check_result stalemate_closed_form(std::uint64_t n) {
    for (const auto& lam : enumerate(n, restriction::strict, 2))
        if (is_h_core(lam) != matches_stalemate_form(lam))
            return detail::fail(detail::cat("n=", n, ": (", lam.to_string(), ") is ",
                                            is_h_core(lam) ? "" : "not ",
                                            "a stalemate but the closed form says otherwise"));
    return {};
}

/* Accumulated move weight accounts for the nodes removed, move by move. */
inline check_result weight_law(std::uint64_t n) {
    using detail::cat, detail::fail;
    for (const auto& lam : enumerate(n, restriction::strict, 2)) {
        const auto canon = h_core(lam);
        if (2 * canon.weight != lam.sum() - canon.core.sum())
            return fail(cat("n=", n, ": (", lam.to_string(), ") weight ", canon.weight,
                            " but cores differ by ", lam.sum() - canon.core.sum(), " nodes"));
        abacus_state s = abacus_state::from_partition(lam);
        for (const auto& mv : canon.trace) {
            const abacus_state next = apply_move(s, mv);
            const std::uint64_t before = s.to_partition().sum();
            const std::uint64_t after = next.to_partition().sum();
            if (before - after != 2 * mv.weight())
                return fail(cat("n=", n, ": move ", to_string(mv.kind), " at ", mv.position,
                                " removed ", before - after, " nodes, weight ", mv.weight()));
            s = next;
        }
        if (s.to_partition() != canon.core)
            return fail(cat("n=", n, ": trace replay of (", lam.to_string(),
                            ") missed the stalemate"));
    }
    return {};
}

/* Counting strict partitions by either core weight gives p(w). */
inline check_result proposition_counts(std::uint64_t n) {
    for (const auto& row : weight_count_report(n))
        if (!row.ok)
            return detail::fail(detail::cat("n=", n, " w=", row.w, ": ", row.by_two_core,
                                            " by two-runner core, ", row.by_h_core,
                                            " by stalemate, expected ", row.expected));
    return {};
}

/* Blockwise multiplicities match the even-part counting formula. */
inline check_result block_formula_match(std::uint64_t n) {
    using detail::cat, detail::fail;
    for (const auto& label : block_labels(n)) {
        const auto bd = block_divisors(n, label.index);
        if (!bd.empty() && bd.entries().rbegin()->first > 2 * label.weight + 1)
            return fail(cat("n=", n, " r=", label.nodes, ": exponent ",
                            bd.entries().rbegin()->first, " exceeds twice the weight"));
        for (std::uint64_t i = 0; i <= 2 * label.weight + 1; ++i) {
            const big_int formula = weight_block_multiplicity(i, label.weight);
            if (big_int(bd.multiplicity(i)) != formula)
                return fail(cat("n=", n, " r=", label.nodes, " exponent ", i, ": ",
                                bd.multiplicity(i), " by grouping vs ", formula, " by formula"));
        }
        const auto p = partition_numbers(label.weight);
        if (big_int(bd.total()) != p[label.weight])
            return fail(cat("n=", n, " r=", label.nodes, ": block size ", bd.total(),
                            " but p(w) = ", p[label.weight]));
    }
    return {};
}

/* The blocks partition the full divisor multiset. */
inline check_result block_partition_of_whole(std::uint64_t n) {
    divisor_multiset combined;
    for (const auto& label : block_labels(n)) {
        const auto bd = block_divisors(n, label.index);
        for (const auto& [e, m] : bd.entries())
            combined.add(e, m);
    }
    const auto whole = cartan_divisors(n, 2);
    if (combined != whole)
        return detail::fail(detail::cat("n=", n, ": blocks combine to ", combined.to_string(),
                                        " but the full multiset is ", whole.to_string()));
    return {};
}

/* The exponent depends only on the even parts, the stalemate only on
 * the odd parts, and the parity split round-trips. */
inline check_result parity_determination(std::uint64_t n) {
    using detail::cat, detail::fail;
    for (const auto& lam : enumerate(n, restriction::strict, 2)) {
        const auto split = split_by_parity(lam);
        if (merge_parity_split(split) != lam)
            return fail(cat("n=", n, ": parity split of (", lam.to_string(),
                            ") does not round-trip"));
        const std::uint64_t by_even = e_invariant(split.even_half, 2);
        if (divisor_exponent(lam, 2) != by_even)
            return fail(cat("n=", n, ": (", lam.to_string(), ") exponent ",
                            divisor_exponent(lam, 2), " vs ", by_even, " from even parts"));
        const partition by_odd = h_core(split.odd_parts).core;
        if (h_core(lam).core != by_odd)
            return fail(cat("n=", n, ": stalemate of (", lam.to_string(), ") is (",
                            h_core(lam).core.to_string(), ") but odd parts give (",
                            by_odd.to_string(), ")"));
    }
    return {};
}

/* Unfolding the staircases enumerates the stalemates, one per
 * triangular node count. */
inline check_result staircase_unfolding(unsigned max_m) {
    using detail::cat, detail::fail;
    const auto members = hc_members(triangular(max_m));
    if (members.size() != std::size_t(max_m) + 1)
        return fail(cat("expected ", max_m + 1, " stalemates up to ", triangular(max_m),
                        " nodes, found ", members.size()));
    for (unsigned m = 0; m <= max_m; ++m) {
        const partition u = unfold(staircase(m));
        if (u.sum() != triangular(m))
            return fail(cat("unfold(staircase(", m, ")) has ", u.sum(), " nodes"));
        if (!is_h_core(u) || !matches_stalemate_form(u))
            return fail(cat("unfold(staircase(", m, ")) = (", u.to_string(),
                            ") is not a stalemate"));
        if (u != members[m])
            return fail(cat("unfold(staircase(", m, ")) = (", u.to_string(),
                            ") but the stalemate with that node count is (",
                            members[m].to_string(), ")"));
    }
    return {};
}

/* Blocks of equal weight have identical divisor multisets, across n. */
inline check_result weight_only_dependence(std::uint64_t max_n) {
    std::map<std::uint64_t, std::pair<divisor_multiset, std::string>> seen;
    for (std::uint64_t n = 0; n <= max_n; ++n)
        for (const auto& label : block_labels(n)) {
            const auto bd = block_divisors(n, label.index);
            const auto where = detail::cat("n=", n, " r=", label.nodes);
            const auto [it, fresh] = seen.emplace(label.weight, std::make_pair(bd, where));
            if (!fresh && it->second.first != bd)
                return detail::fail(detail::cat("weight ", label.weight, ": ", bd.to_string(),
                                                " at ", where, " vs ",
                                                it->second.first.to_string(), " at ",
                                                it->second.second));
        }
    return {};
}

/* The five 2-regular partitions of 7, frozen: image, exponent, both
 * cores, the two block multisets, and the weight-2 memberships. */
inline check_result reference_table_n7() {
    using detail::cat, detail::fail;
    struct row {
        const char* lam;
        const char* image;
        std::uint64_t exponent;
        const char* core2;
        const char* coreh;
    };
    static constexpr row rows[] = {
        {"7", "7", 0, "1", "3"},
        {"6,1", "3,3,1", 1, "2,1", "1"},
        {"5,2", "5,1,1", 1, "1", "1"},
        {"4,3", "3,1,1,1,1", 3, "2,1", "3"},
        {"4,2,1", "1,1,1,1,1,1,1", 4, "1", "1"},
    };
    const auto strict7 = enumerate(7, restriction::p_regular, 2);
    if (strict7.size() != std::size(rows))
        return fail(cat("expected ", std::size(rows), " strict partitions of 7, got ",
                        strict7.size()));
    for (std::size_t i = 0; i < std::size(rows); ++i) {
        const partition lam = parse_partition(rows[i].lam);
        if (strict7[i] != lam)
            return fail(cat("row ", i, ": enumeration gives (", strict7[i].to_string(),
                            "), table has (", rows[i].lam, ")"));
        if (glaisher_map(lam, 2).to_string() != rows[i].image)
            return fail(cat("(", rows[i].lam, "): image (", glaisher_map(lam, 2).to_string(),
                            ") vs (", rows[i].image, ")"));
        if (divisor_exponent(lam, 2) != rows[i].exponent)
            return fail(cat("(", rows[i].lam, "): exponent ", divisor_exponent(lam, 2), " vs ",
                            rows[i].exponent));
        if (two_core(lam).core.to_string() != rows[i].core2)
            return fail(cat("(", rows[i].lam, "): two-runner core (",
                            two_core(lam).core.to_string(), ") vs (", rows[i].core2, ")"));
        if (h_core(lam).core.to_string() != rows[i].coreh)
            return fail(cat("(", rows[i].lam, "): stalemate (", h_core(lam).core.to_string(),
                            ") vs (", rows[i].coreh, ")"));
    }
    if (cartan_divisors(7, 2).to_string() != "{0:1, 1:2, 3:1, 4:1}")
        return fail(cat("divisors of n=7: ", cartan_divisors(7, 2).to_string()));
    if (block_divisors(7, 1).to_string() != "{1:2, 4:1}")
        return fail(cat("weight-3 block of n=7: ", block_divisors(7, 1).to_string()));
    if (block_divisors(7, 2).to_string() != "{0:1, 3:1}")
        return fail(cat("weight-2 block of n=7: ", block_divisors(7, 2).to_string()));
    const auto by2 = strict_with_2weight(7, 2);
    if (by2 != std::vector<partition>{parse_partition("6,1"), parse_partition("4,3")})
        return fail("weight-2 membership by two-runner core is wrong");
    const auto byh = strict_with_hweight(7, 2);
    if (byh != std::vector<partition>{parse_partition("7"), parse_partition("4,3")})
        return fail("weight-2 membership by stalemate is wrong");
    return divisor_oracle_match(7, 2);
}

/* p(n) decomposes over odd-part content; tables vs direct enumeration. */
inline check_result counting_identity(std::uint64_t n) {
    using detail::cat, detail::fail;
    const auto p = partition_numbers(n);
    const auto q = strict_partition_numbers(n);
    big_int sum = 0;
    for (std::uint64_t k = n % 2; k <= n; k += 2)
        sum += q[k] * p[(n - k) / 2];
    if (sum != p[n])
        return fail(cat("n=", n, ": p(n)=", p[n], " but the odd-part split sums to ", sum));
    return {};
}

/* Recurrence tables vs exhaustive enumeration (enumeration is the
 * slow side; keep n modest). */
inline check_result count_by_enumeration(std::uint64_t n) {
    using detail::cat, detail::fail;
    const std::uint64_t all = enumerate(n, restriction::none).size();
    if (big_int(all) != count_partitions(n))
        return fail(cat("n=", n, ": ", all, " partitions enumerated, table says ",
                        count_partitions(n)));
    const std::uint64_t strict = enumerate(n, restriction::strict).size();
    const std::uint64_t odd = enumerate(n, restriction::odd).size();
    if (strict != odd || big_int(strict) != count_strict(n))
        return fail(cat("n=", n, ": ", strict, " strict vs ", odd, " odd-part partitions, ",
                        "table says ", count_strict(n)));
    return {};
}

}  // namespace cartan::checks
