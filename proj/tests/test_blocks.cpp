#include <catch2/catch_amalgamated.hpp>

#include "cartan/blocks.hpp"
#include "cartan/checks.hpp"

using namespace cartan;

TEST_CASE("triangular numbers and staircase indices") {
    CHECK(triangular(0) == 0);
    CHECK(triangular(3) == 6);
    CHECK(triangular(6) == 21);
    CHECK(staircase_index(0) == 0u);
    CHECK(staircase_index(1) == 1u);
    CHECK(staircase_index(3) == 2u);
    CHECK(staircase_index(10) == 4u);
    CHECK_FALSE(staircase_index(2).has_value());
    CHECK_FALSE(staircase_index(7).has_value());
}

TEST_CASE("two-runner cores of the reference partitions") {
    CHECK(two_core(parse_partition("6,1")).core == parse_partition("2,1"));
    CHECK(two_core(parse_partition("6,1")).weight == 2);
    CHECK(two_core(parse_partition("1")).core == parse_partition("1"));
    CHECK(two_core(parse_partition("1")).weight == 0);
    CHECK(two_core(parse_partition("4,2,1")).core == parse_partition("1"));
    CHECK(two_core(parse_partition("4,2,1")).weight == 3);
    CHECK(two_core(parse_partition("7")).core == parse_partition("1"));
    CHECK(two_core(parse_partition("4,3")).core == parse_partition("2,1"));
    CHECK(two_core(parse_partition("5,2")).core == parse_partition("1"));
    CHECK(two_core(parse_partition("2,2")).core == partition());
    CHECK(two_core(parse_partition("2,2")).weight == 2);
    CHECK(two_core(partition()).core == partition());
}

TEST_CASE("the two-runner core is an idempotent staircase") {
    for (std::uint64_t n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate(n, restriction::none)) {
            const auto [core, weight] = two_core(lam);
            CHECK(core.sum() + 2 * weight == n);
            const auto index = staircase_index(core.sum());
            REQUIRE(index.has_value());
            CHECK(core == staircase(*index));
            CHECK(two_core(core).core == core);
            CHECK(two_core(core).weight == 0);
        }
}

TEST_CASE("parity split and merge") {
    const auto s = split_by_parity(parse_partition("9,5,3,2"));
    CHECK(s.odd_parts == parse_partition("9,5,3"));
    CHECK(s.even_half == parse_partition("1"));

    const auto t = split_by_parity(parse_partition("4,2,1"));
    CHECK(t.odd_parts == parse_partition("1"));
    CHECK(t.even_half == parse_partition("2,1"));

    const auto u = split_by_parity(parse_partition("7"));
    CHECK(u.odd_parts == parse_partition("7"));
    CHECK(u.even_half == partition());

    for (std::uint64_t n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate(n, restriction::none))
            CHECK(merge_parity_split(split_by_parity(lam)) == lam);
}

TEST_CASE("weight-w strict partitions by either core") {
    const auto by2 = strict_with_2weight(7, 2);
    REQUIRE(by2.size() == 2);
    CHECK(by2[0] == parse_partition("6,1"));
    CHECK(by2[1] == parse_partition("4,3"));

    const auto byh = strict_with_hweight(7, 2);
    REQUIRE(byh.size() == 2);
    CHECK(byh[0] == parse_partition("7"));
    CHECK(byh[1] == parse_partition("4,3"));

    CHECK(strict_with_2weight(7, 1).empty());  // 5 is not triangular
    CHECK(strict_with_hweight(7, 1).empty());
}

TEST_CASE("block labels pair a staircase with a weight") {
    const auto b7 = block_labels(7);
    REQUIRE(b7.size() == 2);
    CHECK(b7[0] == block_label{1, 1, 3});
    CHECK(b7[1] == block_label{2, 3, 2});
    CHECK(b7[0].core_2() == parse_partition("1"));
    CHECK(b7[0].core_h() == parse_partition("1"));
    CHECK(b7[1].core_2() == parse_partition("2,1"));
    CHECK(b7[1].core_h() == parse_partition("3"));

    const auto b6 = block_labels(6);
    REQUIRE(b6.size() == 2);
    CHECK(b6[0] == block_label{0, 0, 3});
    CHECK(b6[1] == block_label{3, 6, 0});

    const auto b0 = block_labels(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == block_label{0, 0, 0});
}

TEST_CASE("blockwise divisors of the reference case") {
    CHECK(block_divisors(7, 1).to_string() == "{1:2, 4:1}");
    CHECK(block_divisors(7, 2).to_string() == "{0:1, 3:1}");
    CHECK(block_divisors(0, 0).to_string() == "{0:1}");
    CHECK_THROWS_AS(block_divisors(7, 0), std::invalid_argument);  // parity mismatch
    CHECK_THROWS_AS(block_divisors(5, 3), std::invalid_argument);  // staircase too large
}

TEST_CASE("blocks partition the divisor multiset") {
    for (std::uint64_t n = 0; n <= 16; ++n) {
        divisor_multiset combined;
        std::uint64_t members = 0;
        for (const auto& label : block_labels(n)) {
            const auto bd = block_divisors(n, label.index);
            members += bd.total();
            for (const auto& [e, m] : bd.entries())
                combined.add(e, m);
        }
        CHECK(members == enumerate(n, restriction::strict).size());
        CHECK(combined == cartan_divisors(n, 2));
    }
}

TEST_CASE("strict partition counts by e-invariant") {
    CHECK(count_strict_with_e(0, 0) == 1);
    CHECK(count_strict_with_e(4, 3) == 1);
    CHECK(count_strict_with_e(3, 2) == 1);
    CHECK(count_strict_with_e(3, 6) == 1);
    for (std::uint64_t k = 1; k <= 9; k += 2) {
        CHECK(count_strict_with_e(1, k) == 1);
        CHECK(count_strict_with_e(0, k) == 0);
        if (k >= 2)
            CHECK(count_strict_with_e(1, k - 1) == 0);
    }
    // every strict partition of k is counted under exactly one invariant
    for (std::uint64_t k = 0; k <= 10; ++k) {
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i <= 2 * k + 1; ++i)
            total += count_strict_with_e(i, k);
        CHECK(big_int(total) == count_strict(k));
    }
}

TEST_CASE("closed-form block multiplicities") {
    CHECK(weight_block_multiplicity(1, 3) == 2);
    CHECK(weight_block_multiplicity(4, 3) == 1);
    CHECK(weight_block_multiplicity(0, 0) == 1);
    CHECK(weight_block_multiplicity(0, 2) == 1);
    CHECK(weight_block_multiplicity(3, 2) == 1);
    CHECK(weight_block_multiplicity(0, 4) == 2);

    // multiplicities over all exponents fill a block of size p(w)
    for (std::uint64_t w = 0; w <= 8; ++w) {
        big_int total = 0;
        for (std::uint64_t i = 0; i <= 2 * w + 1; ++i)
            total += weight_block_multiplicity(i, w);
        CHECK(total == partition_numbers(w).back());
    }
}

TEST_CASE("per-weight census matches p(w)") {
    for (const auto& row : weight_count_report(7)) {
        CHECK(row.ok);
        if (row.w == 2) {
            CHECK(row.feasible);
            CHECK(row.by_two_core == 2);
            CHECK(row.by_h_core == 2);
        }
        if (row.w < 2)
            CHECK_FALSE(row.feasible);
    }
    const auto r0 = weight_count_report(0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].feasible);
    CHECK(r0[0].expected == 1);
    CHECK(r0[0].ok);
}

TEST_CASE("cross-validation checks pass at unit scale") {
    for (std::uint64_t n = 0; n <= 10; ++n) {
        for (unsigned p : {2u, 3u}) {
            CHECK(checks::glaisher_bijection(n, p).ok);
            CHECK(checks::divisor_oracle_match(n, p).ok);
            CHECK(checks::exponent_closed_form(n, p).ok);
            CHECK(checks::e_invariant_scaling(n, p).ok);
        }
        CHECK(checks::stalemate_closed_form(n).ok);
        CHECK(checks::weight_law(n).ok);
        CHECK(checks::proposition_counts(n).ok);
        CHECK(checks::block_formula_match(n).ok);
        CHECK(checks::block_partition_of_whole(n).ok);
        CHECK(checks::parity_determination(n).ok);
        CHECK(checks::counting_identity(n).ok);
        CHECK(checks::count_by_enumeration(n).ok);
    }
    CHECK(checks::abacus_confluence(10, 10, 1).ok);
    CHECK(checks::staircase_unfolding(8).ok);
    CHECK(checks::weight_only_dependence(12).ok);
    CHECK(checks::reference_table_n7().ok);
}
