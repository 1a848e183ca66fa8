#include <doctest.h>

#include <random>
#include <stdexcept>

#include "psep/generators.hpp"
#include "psep/graph.hpp"
#include "psep/oracle.hpp"

using namespace psep;

TEST_CASE("separator recognition") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(is_p_size_separator(p3, VertexSet{1}, 1));
    CHECK_FALSE(is_p_size_separator(p3, VertexSet{0}, 1));
    CHECK(is_p_size_separator(p3, VertexSet{}, 3));
    CHECK_FALSE(is_p_size_separator(p3, VertexSet{}, 2));
    CHECK_FALSE(is_p_size_separator(p3, VertexSet{}, 1));
    CHECK(is_p_size_separator(p3, VertexSet{0, 1, 2}, 1));
    CHECK_THROWS_AS(is_p_size_separator(p3, VertexSet{5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_p_size_separator(p3, VertexSet{}, 0), std::invalid_argument);
}

TEST_CASE("branch oracle on hand-checked instances") {
    Graph p3(3, {{0, 1}, {1, 2}});
    auto r = min_p_separator(p3, 1);
    REQUIRE(r);
    CHECK(r->size == 1);
    CHECK(r->separator == VertexSet{1});

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto rc4 = min_p_separator(c4, 1);
    REQUIRE(rc4);
    CHECK(rc4->size == 2);
    CHECK(is_p_size_separator(c4, rc4->separator, 1));

    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto rc6 = min_p_separator(c6, 2);
    REQUIRE(rc6);
    CHECK(rc6->size == 2);

    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                 {2, 3}, {2, 4}, {3, 4}});
    auto rk5 = min_p_separator(k5, 1);
    REQUIRE(rk5);
    CHECK(rk5->size == 4);

    auto empty = min_p_separator(Graph(0), 1);
    REQUIRE(empty);
    CHECK(empty->size == 0);
}

TEST_CASE("branch oracle adds up over components") {
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto r1 = min_p_separator(two_triangles, 1);
    REQUIRE(r1);
    CHECK(r1->size == 4);
    auto r2 = min_p_separator(two_triangles, 2);
    REQUIRE(r2);
    CHECK(r2->size == 2);
}

TEST_CASE("cap turns the oracle into a budget check") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(min_p_separator(c4, 1, 1));
    auto r = min_p_separator(c4, 1, 2);
    REQUIRE(r);
    CHECK(r->size == 2);
    CHECK_THROWS_AS(min_p_separator(c4, 1, -1), std::invalid_argument);
}

TEST_CASE("exhaustive oracle returns the lexicographically first answer") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto r = min_p_separator_exhaustive(p4, 1);
    CHECK(r.size == 2);
    CHECK(r.separator == VertexSet{0, 2});

    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto rc6 = min_p_separator_exhaustive(c6, 2);
    CHECK(rc6.size == 2);
    CHECK(rc6.separator == VertexSet{0, 3});

    CHECK_THROWS_AS(min_p_separator_exhaustive(Graph(26), 1), std::invalid_argument);
}

TEST_CASE("branch and exhaustive oracles agree on random graphs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + (int)(rng() % 9);
        int percent = 10 + (int)(rng() % 40);
        int p = 1 + (int)(rng() % 3);
        Graph g = gen_random_prob(n, percent, rng());
        auto fast = min_p_separator(g, p);
        auto slow = min_p_separator_exhaustive(g, p);
        REQUIRE(fast);
        CHECK(fast->size == slow.size);
        CHECK(is_p_size_separator(g, fast->separator, p));
        CHECK(is_p_size_separator(g, slow.separator, p));
    }
}
