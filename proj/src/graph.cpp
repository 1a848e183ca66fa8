#include "psep/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace psep {

VertexSet::VertexSet(std::initializer_list<int> ids) : ids_(ids) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from(std::vector<int> ids) {
    VertexSet s;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        require_vertex(u);
        require_vertex(v);
        if (u == v) continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<long long>(nbrs.size());
    }
    m_ /= 2;
}

void Graph::require_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: vertex id " + std::to_string(v) + " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    require_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<int> bfs_prefix(const Graph& g, int start, const std::vector<char>& alive, int limit) {
    std::vector<int> order;
    if (limit == 0 || !alive[start]) return order;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        order.push_back(u);
        if (limit >= 0 && static_cast<int>(order.size()) == limit) break;
        for (int w : g.neighbors(u)) {
            if (!seen[w] && alive[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return order;
}

std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<char>& alive) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!alive[v] || seen[v]) continue;
        std::vector<int> queue{v};
        seen[v] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        comps.push_back(std::move(queue));
    }
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<char> alive(g.num_vertices(), 1);
    std::vector<VertexSet> out;
    for (auto& comp : components_within(g, alive)) out.push_back(VertexSet::from(std::move(comp)));
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> to_orig(s.begin(), s.end());
    std::vector<int> to_new(g.num_vertices(), -1);
    for (std::size_t i = 0; i < to_orig.size(); ++i) {
        int v = to_orig[i];
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("induced_subgraph: vertex id out of range");
        to_new[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < to_orig.size(); ++i) {
        for (int w : g.neighbors(to_orig[i])) {
            if (to_new[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), to_new[w]);
        }
    }
    return {Graph(static_cast<int>(to_orig.size()), edges), std::move(to_orig)};
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    if (s.empty()) {
        std::vector<int> all(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
        return VertexSet::from(std::move(all));
    }
    std::vector<char> in_s(g.num_vertices(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("neighborhood: vertex id out of range");
        in_s[v] = 1;
    }
    std::vector<int> out;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (!in_s[w]) out.push_back(w);
    return VertexSet::from(std::move(out));
}

VertexSet SubgraphPacking::all_vertices() const {
    VertexSet all;
    for (const auto& part : parts) all = all.unite(part);
    return all;
}

SubgraphPacking maximal_p1_packing(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("maximal_p1_packing: p must be >= 1");
    SubgraphPacking packing;
    packing.p = p;
    std::vector<char> alive(g.num_vertices(), 1);
    for (;;) {
        const std::vector<int>* big = nullptr;
        auto comps = components_within(g, alive);
        for (const auto& comp : comps) {
            if (static_cast<int>(comp.size()) > p) {
                big = &comp;
                break;
            }
        }
        if (!big) break;
        auto part = bfs_prefix(g, big->front(), alive, p + 1);
        std::sort(part.begin(), part.end());
        for (int v : part) alive[v] = 0;
        packing.parts.push_back(VertexSet::from(std::move(part)));
    }
    return packing;
}

VertexSet connected_truncate(const Graph& g, const VertexSet& s, int target) {
    if (target < 1) throw std::invalid_argument("connected_truncate: target must be >= 1");
    if (static_cast<int>(s.size()) < target)
        throw std::invalid_argument("connected_truncate: set smaller than target");
    std::vector<char> alive(g.num_vertices(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("connected_truncate: vertex id out of range");
        alive[v] = 1;
    }
    auto order = bfs_prefix(g, s.front(), alive, target);
    if (static_cast<int>(order.size()) < target)
        throw std::invalid_argument("connected_truncate: induced subgraph is not connected");
    return VertexSet::from(std::move(order));
}

}  // namespace psep
