#pragma once

#include <optional>
#include <vector>

#include "psep/graph.hpp"

namespace psep {

// Bipartite view of a graph split into (A, B) = (V \ b, b). Each A-side node
// stands for one connected component of G[A] and carries that component's
// vertex count as its weight; each B-side node is a single vertex of b.
// An edge means some member of the component is adjacent to the b-vertex.
struct AuxBipartite {
    struct ANode {
        VertexSet members;
        int weight = 0;
        std::vector<int> nbrs;  // b-node indices, ascending
    };
    struct BNode {
        int vertex = -1;
        std::vector<int> nbrs;  // a-node indices, ascending
    };
    std::vector<ANode> a_nodes;  // ordered by smallest member id
    std::vector<BNode> b_nodes;  // ordered by vertex id
    int p = 0;
};

// Requires every component of G[V \ b] to have at most p vertices.
AuxBipartite build_aux(const Graph& g, const VertexSet& b, int p);

// Star assignment: every A-node is assigned to exactly one adjacent B-node.
struct StarAssignment {
    std::vector<int> center_of;  // a-node index -> b-node index
};

// Assigns each A-node to its smallest adjacent B-node. Fails if some A-node
// has no B-neighbor (callers must strip components not touching b first).
StarAssignment init_assignment(const AuxBipartite& h);

// B-nodes classified by assigned load: heavy (load >= 2p), medium
// (p <= load < 2p), light (load < p). A-nodes inherit their center's class.
struct LoadClasses {
    enum Cls { heavy, medium, light };
    std::vector<long long> load;  // per b-node
    std::vector<Cls> cls;         // per b-node
    std::vector<int> heavy_nodes() const;
};

LoadClasses classify(const AuxBipartite& h, const StarAssignment& m, int p);

// Level structure grown from the heavy B-nodes at level 0, alternating
// assignment edges (even to odd) and non-assignment edges (odd to even).
// Nodes that no alternating path reaches stay at level -1. Even levels hold
// B-nodes, odd levels hold A-nodes.
struct Hierarchy {
    std::vector<int> a_level;
    std::vector<int> b_level;
    int max_level = -1;
};

Hierarchy build_hierarchy(const AuxBipartite& h, const StarAssignment& m, const LoadClasses& classes);

// An A-node at odd level whose reassignment to a next-level B-node keeps that
// node below the heavy threshold. Eliminating these is what drives the crown
// computation to its fixed point.
struct RedundantVertex {
    int a_node = -1;
    int b_node = -1;
};

// First redundant pair in (odd level, a-node index, b-node index) order.
std::optional<RedundantVertex> find_redundant(const AuxBipartite& h, const StarAssignment& m,
                                              const LoadClasses& classes, const Hierarchy& hier,
                                              int p);

StarAssignment eliminate_redundant(StarAssignment m, const AuxBipartite& h, RedundantVertex r);

// Structural self-check of a hierarchy (level parity, supporting neighbors,
// level minimality). Throws internal_error on violation.
void check_hierarchy(const AuxBipartite& h, const StarAssignment& m, const LoadClasses& classes,
                     const Hierarchy& hier);

}  // namespace psep
