#pragma once

#include <string>
#include <vector>

#include "psep/graph.hpp"

namespace psep {

// One witness star: a kept B-vertex together with the components of G[i_set]
// assigned to it. total_weight is the number of vertices across the leaves.
struct CrownStar {
    int center = -1;
    std::vector<VertexSet> leaf_components;
    long long total_weight = 0;
};

// Partition of the graph it was computed on. c_set joins the solution, i_set
// is discarded, j_set is the untouched remainder. witness carries one star
// per c_set vertex with leaf weight >= p, certifying that any solution needs
// at least |c_set| deletions inside i_set U c_set.
struct CrownDecomposition {
    VertexSet i_set;
    VertexSet c_set;
    VertexSet j_set;
    std::vector<CrownStar> witness;
    int p = 0;
    struct Stats {
        long long eliminations = 0;
        int aux_nodes = 0;
    };
    Stats stats;
};

// Computes a crown decomposition with head b. Requires every component of
// G[V \ b] to have at most p vertices and to be adjacent to b. The output
// additionally satisfies |V \ (b U i_set)| <= (2p-1) * |b \ c_set|.
CrownDecomposition crown(const Graph& g, const VertexSet& b, int p);

struct CrownCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

// Re-derives every decomposition invariant from scratch: the three sets
// partition V, no i-j edges, components of G[i_set] have <= p vertices, and
// the witness is a valid star packing (disjoint leaves that are whole
// components of G[i_set], each adjacent to its center, one star per c-vertex
// with leaf weight >= p).
CrownCheck verify_crown(const Graph& g, const CrownDecomposition& cd);

}  // namespace psep
