#pragma once

#include <map>
#include <optional>
#include <vector>

#include "psep/crown.hpp"
#include "psep/graph.hpp"
#include "psep/local_adjust.hpp"

namespace psep {

// Building block of the separator scaffold: a lone vertex or a connected set
// of exactly p+1 vertices.
struct Base {
    enum Kind { single_vertex, group };
    Kind kind = group;
    VertexSet vertices;
};

struct BaseSet {
    std::vector<Base> bases;
    VertexSet all_vertices() const;
    int single_count() const;
};

// Graph with each group base shrunk to one vertex. Plain vertices keep their
// relative order and come first; group vertices follow in base order.
struct ContractedGraph {
    Graph graph;
    std::vector<int> to_original;   // contracted id -> original id, -1 for group vertices
    std::vector<int> base_of;       // contracted id -> base index, -1 outside bases
    std::vector<int> to_contracted; // original id -> contracted id
    std::vector<int> head;          // contracted ids standing for the bases, ascending
};

ContractedGraph contract(const Graph& g, const BaseSet& bs);

// The base's vertices plus every component of the graph minus all base
// vertices that touches this base.
struct AssociateSubgraph {
    Graph graph;
    std::vector<int> to_original;
    VertexSet vertices;
};

AssociateSubgraph associate_subgraph(const Graph& g, const BaseSet& bs, int base_index);

// Components reserved for single-base vertices to grow back into group
// bases. Keyed by the vertex; component lists are pairwise disjoint across
// owners and each component is adjacent to its owner.
struct SingleWitness {
    std::map<int, std::vector<VertexSet>> stars;
    long long total(int v) const;
};

// Replaces the group base at base_index by one connected (p+1)-set from each
// split side, then grows every single base back into a group base using its
// witness components that stay clear of the two new sets. Returns nothing if
// no placement of the two new sets leaves every single base enough witness
// weight to grow back; on success the witness is consumed and the returned
// set has exactly one more base and no single bases.
std::optional<BaseSet> extension_operation(const Graph& g, const BaseSet& bs, int base_index,
                                           const SplitPair& split, SingleWitness& witness,
                                           int p);

// Throws internal_error when the scaffold invariants are broken: bases
// pairwise disjoint and well-formed, every component outside the scaffold
// has at most p vertices, and every single base owns disjoint witness
// components adjacent to it with at least 4p vertices in total.
void check_base_properties(const Graph& g, const BaseSet& bs, const SingleWitness& witness,
                           int p);

struct SccStats {
    long long extension_steps = 0;
    long long crown_rounds = 0;
    long long eliminations = 0;
    long long repacked_bases = 0;
    long long extension_cap = 0;
    long long crown_rounds_cap = 0;
    BaseSet final_bases;
};

// Full scaffold-contract-crown pipeline on one connected graph with more
// than p vertices. Returns a crown decomposition whose kept part is small
// relative to any separator of it.
CrownDecomposition scc(const Graph& g, int p, SccStats* stats = nullptr);

struct KernelStats {
    long long extension_steps = 0;
    long long crown_rounds = 0;
    long long eliminations = 0;
    long long repacked_bases = 0;
    int components_processed = 0;
    int stripped_components = 0;
    int reduction_rounds = 0;
};

struct KernelOutcome {
    enum Verdict { reduced, no_instance };
    enum Mode { linear, quadratic };
    Verdict verdict = reduced;
    Mode mode = linear;
    Graph kernel_graph;
    std::vector<int> kernel_to_original;
    VertexSet forced;
    CrownDecomposition decomposition;
    int budget_used = 0;
    long long size_bound = -1;  // kernel size limit implied by the budget, -1 without one
    KernelStats stats;
};

KernelOutcome kernelize(const Graph& g, int p, std::optional<int> k = std::nullopt);
KernelOutcome kernelize_quadratic(const Graph& g, int p, std::optional<int> k = std::nullopt);

}  // namespace psep
