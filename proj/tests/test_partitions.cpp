#include <catch2/catch_amalgamated.hpp>

#include "cartan/partitions.hpp"

using namespace cartan;

TEST_CASE("partition construction and accessors") {
    const partition lam({9, 5, 3, 2});
    CHECK(lam.length() == 4);
    CHECK(lam.sum() == 19);
    CHECK_FALSE(lam.empty());
    CHECK(lam.parts() == std::vector<unsigned>{9, 5, 3, 2});

    const partition empty;
    CHECK(empty.empty());
    CHECK(empty.sum() == 0);
    CHECK(empty.length() == 0);

    CHECK(partition({3, 3, 3}).sum() == 9);
    CHECK_THROWS_AS(partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(partition({2, 3}), std::invalid_argument);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(partition({4, 2, 1}).conjugate() == partition({3, 2, 1, 1}));
    CHECK(partition({1, 1, 1}).conjugate() == partition({3}));
    CHECK(partition().conjugate() == partition());
    for (const auto& lam : enumerate(9, restriction::none))
        CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("to_string and parse round-trip") {
    CHECK(partition({9, 5, 3, 2}).to_string() == "9,5,3,2");
    CHECK(partition().to_string() == "()");
    CHECK(parse_partition("9,5,3,2") == partition({9, 5, 3, 2}));
    CHECK(parse_partition("7") == partition({7}));
    CHECK(parse_partition("") == partition());
    CHECK(parse_partition("3,3,1") == partition({3, 3, 1}));

    CHECK_THROWS_AS(parse_partition("3,5"), std::invalid_argument);  // not sorted
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3, 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,0"), std::invalid_argument);
}

TEST_CASE("primality guard") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(9));
    CHECK_NOTHROW(require_prime(5));
    CHECK_THROWS_AS(require_prime(6), std::invalid_argument);
    CHECK_THROWS_AS(require_prime(0), std::invalid_argument);
}

TEST_CASE("restriction predicates") {
    CHECK(is_p_regular(parse_partition("3,3,1"), 3));
    CHECK_FALSE(is_p_regular(parse_partition("3,3,3,1"), 3));
    CHECK(is_p_regular(parse_partition("4,2,1"), 2));
    CHECK_FALSE(is_p_regular(parse_partition("2,2"), 2));
    CHECK(is_p_regular(partition(), 2));

    CHECK(is_p_class_regular(parse_partition("5,1,1"), 3));
    CHECK_FALSE(is_p_class_regular(parse_partition("6,1"), 3));
    CHECK(is_strict(parse_partition("9,5,3,2")));
    CHECK_FALSE(is_strict(parse_partition("3,3")));
    CHECK(has_only_odd_parts(parse_partition("5,3,3,1")));
    CHECK_FALSE(has_only_odd_parts(parse_partition("4,3")));
}

TEST_CASE("scale multiplies every part") {
    CHECK(scale(parse_partition("5,4,3"), 2) == parse_partition("10,8,6"));
    CHECK(scale(partition(), 3) == partition());
    CHECK_THROWS_AS(scale(parse_partition("2,1"), 0), std::invalid_argument);
}

TEST_CASE("enumeration is reverse-lexicographic") {
    const auto all4 = enumerate(4, restriction::none);
    REQUIRE(all4.size() == 5);
    CHECK(all4[0] == parse_partition("4"));
    CHECK(all4[1] == parse_partition("3,1"));
    CHECK(all4[2] == parse_partition("2,2"));
    CHECK(all4[3] == parse_partition("2,1,1"));
    CHECK(all4[4] == parse_partition("1,1,1,1"));

    const auto strict7 = enumerate(7, restriction::p_regular, 2);
    REQUIRE(strict7.size() == 5);
    CHECK(strict7[0] == parse_partition("7"));
    CHECK(strict7[1] == parse_partition("6,1"));
    CHECK(strict7[2] == parse_partition("5,2"));
    CHECK(strict7[3] == parse_partition("4,3"));
    CHECK(strict7[4] == parse_partition("4,2,1"));

    const auto cr5 = enumerate(5, restriction::p_class_regular, 3);
    REQUIRE(cr5.size() == 5);
    CHECK(cr5[0] == parse_partition("5"));
    CHECK(cr5[1] == parse_partition("4,1"));
    CHECK(cr5[2] == parse_partition("2,2,1"));
    CHECK(cr5[3] == parse_partition("2,1,1,1"));
    CHECK(cr5[4] == parse_partition("1,1,1,1,1"));
}

TEST_CASE("enumeration respects its restriction") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (const auto& lam : enumerate(11, restriction::p_regular, p))
            CHECK(is_p_regular(lam, p));
        for (const auto& lam : enumerate(11, restriction::p_class_regular, p))
            CHECK(is_p_class_regular(lam, p));
    }
    for (const auto& lam : enumerate(10, restriction::strict))
        CHECK(is_strict(lam));
    for (const auto& lam : enumerate(10, restriction::odd))
        CHECK(has_only_odd_parts(lam));
    CHECK(enumerate(0, restriction::none).size() == 1);
    CHECK(enumerate(0, restriction::strict).front() == partition());
}

TEST_CASE("multiplicity encoding round-trips") {
    const partition lam = parse_partition("5,3,3,1,1,1");
    const multiplicity_map m = to_multiplicities(lam);
    CHECK(m == multiplicity_map{{5, 1}, {3, 2}, {1, 3}});
    CHECK(from_multiplicities(m) == lam);
    CHECK(to_multiplicities(partition()).empty());
    CHECK(from_multiplicities({}) == partition());
    CHECK_THROWS_AS(from_multiplicities({{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_multiplicities({{2, 0}}), std::invalid_argument);
}

TEST_CASE("partition numbers match the reference sequence") {
    const std::uint64_t expected_p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    const std::uint64_t expected_q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15};
    const auto p = partition_numbers(12);
    const auto q = strict_partition_numbers(12);
    for (std::size_t n = 0; n < std::size(expected_p); ++n) {
        CHECK(p[n] == expected_p[n]);
        CHECK(q[n] == expected_q[n]);
    }
    CHECK(count_partitions(60) == 966467);
    CHECK(count_partitions(500).str() == "2300165032574323995027");
    CHECK(count_strict(24) == 122);
    CHECK(count_strict(30) == 296);
}

TEST_CASE("counts agree with enumeration") {
    for (std::uint64_t n : {0, 1, 5, 9, 14}) {
        CHECK(big_int(enumerate(n, restriction::none).size()) == count_partitions(n));
        CHECK(big_int(enumerate(n, restriction::strict).size()) == count_strict(n));
        CHECK(enumerate(n, restriction::odd).size() == enumerate(n, restriction::strict).size());
    }
}

TEST_CASE("class-regular counting table") {
    CHECK(p_class_regular_partition_numbers(24, 2) == strict_partition_numbers(24));
    for (unsigned p : {3u, 5u}) {
        const auto table = p_class_regular_partition_numbers(14, p);
        for (std::uint64_t n = 0; n <= 14; ++n) {
            CHECK(big_int(enumerate(n, restriction::p_class_regular, p).size()) == table[n]);
            CHECK(big_int(enumerate(n, restriction::p_regular, p).size()) == table[n]);
        }
    }
    CHECK_THROWS_AS(p_class_regular_partition_numbers(5, 6), std::invalid_argument);
}
