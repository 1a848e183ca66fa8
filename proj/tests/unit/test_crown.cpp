#include <doctest.h>

#include <random>
#include <stdexcept>

#include "psep/crown.hpp"
#include "psep/generators.hpp"
#include "psep/graph.hpp"

using namespace psep;

TEST_CASE("a star collapses into a single crown") {
    Graph star(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}});
    CrownDecomposition cd = crown(star, VertexSet{0}, 1);
    CHECK(cd.c_set == VertexSet{0});
    CHECK(cd.i_set == VertexSet{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(cd.j_set.empty());
    REQUIRE(cd.witness.size() == 1);
    CHECK(cd.witness[0].center == 0);
    CHECK(cd.witness[0].total_weight == 9);
    CHECK(verify_crown(star, cd).ok);
}

TEST_CASE("an overloaded hub is extracted, the spare hub survives") {
    Graph g(9, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 8}});
    CrownDecomposition cd = crown(g, VertexSet{0, 1}, 1);
    CHECK(cd.c_set == VertexSet{0});
    CHECK(cd.i_set == VertexSet{2, 3, 4, 5, 6, 7});
    CHECK(cd.j_set == VertexSet{1, 8});
    REQUIRE(cd.witness.size() == 1);
    CHECK(cd.witness[0].center == 0);
    CHECK(cd.witness[0].total_weight == 6);
    CHECK(cd.stats.eliminations == 1);
    CHECK(verify_crown(g, cd).ok);
}

TEST_CASE("without a heavy hub nothing is extracted") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CrownDecomposition cd = crown(p5, VertexSet{0, 1, 2, 3}, 1);
    CHECK(cd.c_set.empty());
    CHECK(cd.i_set.empty());
    CHECK(cd.j_set == VertexSet{0, 1, 2, 3, 4});
    CHECK(cd.witness.empty());
    CHECK(verify_crown(p5, cd).ok);
}

TEST_CASE("crown rejects oversized outside components") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(crown(p5, VertexSet{0}, 1), std::invalid_argument);
}

TEST_CASE("verification catches tampered decompositions") {
    Graph star(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}});
    CrownDecomposition cd = crown(star, VertexSet{0}, 1);

    SUBCASE("leaf moved out of the partition") {
        cd.i_set.erase(9);
        auto chk = verify_crown(star, cd);
        CHECK_FALSE(chk.ok);
        CHECK(!chk.violations.empty());
    }
    SUBCASE("leaf moved next to the kept side") {
        cd.i_set.erase(9);
        cd.j_set.insert(9);
        CHECK_FALSE(verify_crown(star, cd).ok);
    }
    SUBCASE("missing witness star") {
        cd.witness.clear();
        CHECK_FALSE(verify_crown(star, cd).ok);
    }
    SUBCASE("starved witness star") {
        cd.witness[0].leaf_components.clear();
        cd.witness[0].total_weight = 0;
        CHECK_FALSE(verify_crown(star, cd).ok);
    }
    SUBCASE("duplicate witness leaves") {
        cd.witness[0].leaf_components.push_back(cd.witness[0].leaf_components.front());
        cd.witness[0].total_weight += 1;
        CHECK_FALSE(verify_crown(star, cd).ok);
    }
}

TEST_CASE("crown respects the kept-side size bound on random graphs") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 6 + (int)(rng() % 25);
        int percent = 5 + (int)(rng() % 26);
        int p = 1 + (int)(rng() % 3);
        Graph g = gen_random_prob(n, percent, rng());
        auto packing = maximal_p1_packing(g, p);
        VertexSet b = packing.all_vertices();
        if (b.empty()) continue;

        // components without packing vertices are too small for a head, drop them
        VertexSet keep;
        for (const auto& comp : connected_components(g))
            if (comp.intersects(b)) keep = keep.unite(comp);
        auto [sub, map] = induced_subgraph(g, keep);
        VertexSet sub_b;
        for (int i = 0; i < (int)map.size(); ++i)
            if (b.contains(map[i])) sub_b.insert(i);

        CrownDecomposition cd = crown(sub, sub_b, p);
        CHECK(verify_crown(sub, cd).ok);
        long long kept_a = (long long)sub.num_vertices() - sub_b.size() - cd.i_set.size();
        long long kept_b = (long long)sub_b.size() - cd.c_set.size();
        CHECK(kept_a <= (2LL * p - 1) * kept_b);
    }
}
