#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace deligne;

TEST_CASE("second cohomology invariants from the pair gcd formula") {
    REQUIRE(h2_invariants(Vec{2, 2}, 0) == Vec{2});
    REQUIRE(h2_invariants(Vec{2, 2}, 2) == Vec{});
    REQUIRE(h2_invariants(Vec{4}, 0) == Vec{});
    REQUIRE(h2_invariants(Vec{2, 4}, 0) == Vec{2});
    REQUIRE(h2_invariants(Vec{2, 2, 2}, 0) == Vec{2, 2, 2});
    REQUIRE(h2_invariants(Vec{4, 6}, 0) == Vec{2});
    REQUIRE(h2_invariants(Vec{4, 6}, 2) == Vec{});
    REQUIRE(h2_invariants(Vec{4, 6}, 3) == Vec{2});
    REQUIRE(h2_invariants(Vec{6, 6}, 3) == Vec{2});
    REQUIRE(h2_invariants(Vec{}, 0) == Vec{});
    REQUIRE_THROWS_AS(h2_invariants(Vec{2, 2}, 4), std::invalid_argument);
}

TEST_CASE("explicit class lists") {
    CocycleClassGroup k4 = h2_classes(Vec{2, 2}, 0);
    REQUIRE(k4.labels == std::vector<std::string>{"triv", "ν"});
    REQUIRE(k4.class_exponents == std::vector<Vec>{{0}, {1}});
    REQUIRE(k4.moduli == Vec{2});

    REQUIRE(h2_classes(Vec{4}, 0).labels == std::vector<std::string>{"triv"});
    REQUIRE(h2_classes(Vec{2, 4}, 0).labels.size() == 2);
    REQUIRE(h2_classes(Vec{2, 2}, 2).labels == std::vector<std::string>{"triv"});

    CocycleClassGroup e8 = h2_classes(Vec{2, 2, 2}, 0);
    REQUIRE(e8.labels.size() == 8);
    REQUIRE(e8.labels[0] == "triv");
    REQUIRE(e8.labels[1] == "ν1");
    REQUIRE(e8.labels[7] == "ν7");

    CocycleClassGroup c33 = h2_classes(Vec{3, 3}, 0);
    REQUIRE(c33.labels.size() == 3);
}

TEST_CASE("brute force cocycle count on the pinned small cases") {
    REQUIRE(h2_brute_force_count(group_new({2, 2}), 0) == 2);
    REQUIRE(h2_brute_force_count(group_new({4}), 0) == 1);
    REQUIRE(h2_brute_force_count(group_new({2, 2}), 2) == 1);
    REQUIRE(h2_brute_force_count(group_new({}), 0) == 1);
    REQUIRE_THROWS_AS(h2_brute_force_count(group_new({17}), 0), std::invalid_argument);
}

TEST_CASE("brute force count matches the formula up to order 8") {
    for (i64 n = 1; n <= 8; ++n)
        for (const Vec& type : abelian_types(n))
            for (i64 ch : {0, 2, 3, 5}) {
                i64 formula = 1;
                for (i64 d : h2_invariants(type, ch)) formula *= d;
                INFO("order " << n << " char " << ch);
                REQUIRE(h2_brute_force_count(group_new(type), ch) == formula);
            }
}

TEST_CASE("group exponent") {
    REQUIRE(group_exponent(group_new({2, 4})) == 4);
    REQUIRE(group_exponent(group_new({6, 4})) == 12);
    REQUIRE(group_exponent(group_new({})) == 1);
}
