#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "psep/graph.hpp"

using namespace psep;

TEST_CASE("vertex set keeps ids sorted and unique") {
    VertexSet s = VertexSet::from({3, 1, 3, 2});
    CHECK(s.ids() == std::vector<int>{1, 2, 3});
    s.insert(0);
    s.insert(2);
    CHECK(s.ids() == std::vector<int>{0, 1, 2, 3});
    s.erase(2);
    s.erase(7);
    CHECK(s.ids() == std::vector<int>{0, 1, 3});
    CHECK(s.front() == 0);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
}

TEST_CASE("vertex set algebra") {
    VertexSet a{1, 2, 3};
    VertexSet b{3, 4};
    CHECK(a.unite(b) == VertexSet{1, 2, 3, 4});
    CHECK(a.minus(b) == VertexSet{1, 2});
    CHECK(a.intersect(b) == VertexSet{3});
    CHECK(a.intersects(b));
    CHECK_FALSE(VertexSet{1}.intersects(VertexSet{2}));
    CHECK(VertexSet{2, 3}.subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(VertexSet{}.subset_of(b));
}

TEST_CASE("graph drops loops and parallel edges") {
    Graph g(3, {{0, 1}, {1, 0}, {2, 2}, {0, 1}, {1, 2}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("connected components come out by smallest member") {
    Graph g(6, {{4, 5}, {0, 1}, {1, 2}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3});
    CHECK(comps[2] == VertexSet{4, 5});
}

TEST_CASE("induced subgraph keeps adjacency and reports the id map") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto [sub, map] = induced_subgraph(c4, VertexSet{0, 1, 3});
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.num_edges() == 2);
    CHECK(map == std::vector<int>{0, 1, 3});
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(0, 2));
    CHECK_FALSE(sub.has_edge(1, 2));
}

TEST_CASE("neighborhood of a set, with the empty-set convention") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(neighborhood(p3, VertexSet{1}) == VertexSet{0, 2});
    CHECK(neighborhood(p3, VertexSet{0, 1}) == VertexSet{2});
    CHECK(neighborhood(p3, VertexSet{}) == VertexSet{0, 1, 2});
}

TEST_CASE("packing picks greedy p+1 pieces from the smallest ids") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto pk = maximal_p1_packing(p5, 1);
    REQUIRE(pk.parts.size() == 2);
    CHECK(pk.parts[0] == VertexSet{0, 1});
    CHECK(pk.parts[1] == VertexSet{2, 3});
    CHECK(pk.all_vertices() == VertexSet{0, 1, 2, 3});

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto pk4 = maximal_p1_packing(k4, 1);
    REQUIRE(pk4.parts.size() == 2);
    CHECK(pk4.parts[0] == VertexSet{0, 1});
    CHECK(pk4.parts[1] == VertexSet{2, 3});

    auto pk2 = maximal_p1_packing(p5, 2);
    REQUIRE(pk2.parts.size() == 1);
    CHECK(pk2.parts[0] == VertexSet{0, 1, 2});

    CHECK_THROWS_AS(maximal_p1_packing(p5, 0), std::invalid_argument);
}

TEST_CASE("packing leaves only small components behind") {
    Graph grid(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8},
                   {0, 3}, {3, 6}, {1, 4}, {4, 7}, {2, 5}, {5, 8}});
    for (int p = 1; p <= 3; ++p) {
        auto pk = maximal_p1_packing(grid, p);
        std::vector<char> alive(9, 1);
        for (const auto& part : pk.parts) {
            CHECK((int)part.size() == p + 1);
            for (int v : part) {
                CHECK(alive[v]);
                alive[v] = 0;
            }
        }
        for (const auto& comp : components_within(grid, alive))
            CHECK((int)comp.size() <= p);
    }
}

TEST_CASE("connected truncate grows a connected prefix") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(connected_truncate(p5, VertexSet{0, 1, 2, 3, 4}, 3) == VertexSet{0, 1, 2});
    CHECK(connected_truncate(p5, VertexSet{2, 3, 4}, 2) == VertexSet{2, 3});
    CHECK_THROWS_AS(connected_truncate(p5, VertexSet{0}, 2), std::invalid_argument);
}

TEST_CASE("components within an alive mask") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    std::vector<char> alive{1, 1, 0, 1, 1};
    auto comps = components_within(p5, alive);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{3, 4});
}

TEST_CASE("bfs prefix respects the limit and the mask") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    std::vector<char> alive(5, 1);
    CHECK(bfs_prefix(p5, 2, alive, 3) == std::vector<int>{2, 1, 3});
    CHECK(bfs_prefix(p5, 0, alive, -1) == std::vector<int>{0, 1, 2, 3, 4});
    alive[1] = 0;
    CHECK(bfs_prefix(p5, 0, alive, -1) == std::vector<int>{0});
}
