#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace psep {

// Sorted set of vertex ids. Iteration is always in ascending id order and
// equality ignores construction order.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    static VertexSet from(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    int front() const { return ids_.front(); }  // smallest id

    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }

    VertexSet unite(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    bool subset_of(const VertexSet& other) const;

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

// Simple undirected graph on vertices 0..n-1. Parallel edges and self loops
// are dropped silently at construction; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

private:
    void require_vertex(int v) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Connected components, ordered by their smallest contained vertex id.
std::vector<VertexSet> connected_components(const Graph& g);

// Induced subgraph on s, renumbered to 0..|s|-1 preserving relative id order.
// Second element maps new ids back to the original ones.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

// Open neighborhood N(s). By convention N of the empty set is every vertex,
// which is what the separator-growing loop in connect_split relies on.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// Vertex-disjoint connected subgraphs of exactly p+1 vertices each.
struct SubgraphPacking {
    int p = 0;
    std::vector<VertexSet> parts;
    VertexSet all_vertices() const;
};

// Greedy maximal packing of connected (p+1)-vertex subgraphs: repeatedly take
// the first p+1 BFS-visited vertices from the smallest-id vertex of the first
// residual component larger than p. Every residual component ends up with at
// most p vertices.
SubgraphPacking maximal_p1_packing(const Graph& g, int p);

// First `target` vertices visited by a BFS over G[s] starting at the smallest
// id in s; they always induce a connected subgraph.
VertexSet connected_truncate(const Graph& g, const VertexSet& s, int target);

// Helpers shared by the algorithm modules: component structure restricted to
// the vertices with alive[v] != 0.
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<char>& alive);

// BFS over alive vertices from start, visiting neighbors in ascending id
// order, stopping after `limit` vertices (limit < 0 means no limit).
std::vector<int> bfs_prefix(const Graph& g, int start, const std::vector<char>& alive, int limit);

}  // namespace psep
