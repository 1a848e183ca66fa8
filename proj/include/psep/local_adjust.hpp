#pragma once

#include <optional>

#include "psep/graph.hpp"

namespace psep {

// Two disjoint vertex sets, each inducing a connected subgraph of at least
// p+1 vertices on the graph they were computed from.
struct SplitPair {
    VertexSet v1;
    VertexSet v2;
};

// Smallest vertex whose removal leaves only components of at most p
// vertices, if any vertex does.
std::optional<int> p_separator_vertex(const Graph& g, int p);

// Splits a connected graph into two disjoint connected pieces of at least
// p+1 vertices each. Requires more than 3p vertices and p_separator_vertex
// returning nothing; 3p vertices are not always splittable (a triangle with
// p = 1 is the smallest witness).
SplitPair connect_split(const Graph& g, int p);

}  // namespace psep
