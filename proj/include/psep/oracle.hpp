#pragma once

#include <optional>

#include "psep/graph.hpp"

namespace psep {

// True iff deleting s leaves only connected components of at most p vertices.
bool is_p_size_separator(const Graph& g, const VertexSet& s, int p);

struct OracleResult {
    VertexSet separator;
    int size = 0;
    bool optimal = true;
};

// Exact minimum p-size separator, meant for small instances. Small
// separators are found by branch and reduce (pick a connected (p+1)-vertex
// subgraph of an oversized component, branch on deleting each vertex);
// large ones by searching for the maximum complement set inducing only
// components of at most p vertices. Returns nothing when every separator is
// larger than cap (cap defaults to the vertex count, which is always
// enough).
std::optional<OracleResult> min_p_separator(const Graph& g, int p,
                                            std::optional<int> cap = std::nullopt);

// Independent cross-check: enumerates vertex subsets by increasing size (and
// lexicographically within a size) until one is a p-size separator. Only
// accepts graphs with up to 25 vertices.
OracleResult min_p_separator_exhaustive(const Graph& g, int p);

}  // namespace psep
