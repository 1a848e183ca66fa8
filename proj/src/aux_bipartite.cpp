#include "psep/aux_bipartite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "psep/errors.hpp"

namespace psep {

AuxBipartite build_aux(const Graph& g, const VertexSet& b, int p) {
    if (p < 1) throw std::invalid_argument("build_aux: p must be >= 1");
    AuxBipartite h;
    h.p = p;

    std::vector<char> in_b(g.num_vertices(), 0);
    for (int v : b) {
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("build_aux: vertex id out of range");
        in_b[v] = 1;
    }

    std::vector<int> b_index(g.num_vertices(), -1);
    for (int v : b) {
        b_index[v] = static_cast<int>(h.b_nodes.size());
        h.b_nodes.push_back({v, {}});
    }

    std::vector<char> alive(g.num_vertices(), 1);
    for (int v : b) alive[v] = 0;
    for (auto& comp : components_within(g, alive)) {
        if (static_cast<int>(comp.size()) > p)
            throw std::invalid_argument("build_aux: component of G - b has more than p vertices");
        AuxBipartite::ANode a;
        a.weight = static_cast<int>(comp.size());
        std::vector<int> nbrs;
        for (int u : comp)
            for (int w : g.neighbors(u))
                if (in_b[w]) nbrs.push_back(b_index[w]);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        a.nbrs = std::move(nbrs);
        a.members = VertexSet::from(std::move(comp));
        int a_idx = static_cast<int>(h.a_nodes.size());
        for (int bn : a.nbrs) h.b_nodes[bn].nbrs.push_back(a_idx);
        h.a_nodes.push_back(std::move(a));
    }
    return h;
}

StarAssignment init_assignment(const AuxBipartite& h) {
    StarAssignment m;
    m.center_of.resize(h.a_nodes.size());
    for (std::size_t a = 0; a < h.a_nodes.size(); ++a) {
        if (h.a_nodes[a].nbrs.empty())
            throw std::invalid_argument(
                "init_assignment: component not adjacent to the B side (strip it first)");
        m.center_of[a] = h.a_nodes[a].nbrs.front();
    }
    return m;
}

LoadClasses classify(const AuxBipartite& h, const StarAssignment& m, int p) {
    LoadClasses out;
    out.load.assign(h.b_nodes.size(), 0);
    for (std::size_t a = 0; a < h.a_nodes.size(); ++a) out.load[m.center_of[a]] += h.a_nodes[a].weight;
    out.cls.resize(h.b_nodes.size());
    for (std::size_t b = 0; b < h.b_nodes.size(); ++b) {
        if (out.load[b] >= 2LL * p) out.cls[b] = LoadClasses::heavy;
        else if (out.load[b] >= p) out.cls[b] = LoadClasses::medium;
        else out.cls[b] = LoadClasses::light;
    }
    return out;
}

std::vector<int> LoadClasses::heavy_nodes() const {
    std::vector<int> out;
    for (std::size_t b = 0; b < cls.size(); ++b)
        if (cls[b] == heavy) out.push_back(static_cast<int>(b));
    return out;
}

Hierarchy build_hierarchy(const AuxBipartite& h, const StarAssignment& m,
                          const LoadClasses& classes) {
    Hierarchy hier;
    hier.a_level.assign(h.a_nodes.size(), -1);
    hier.b_level.assign(h.b_nodes.size(), -1);

    std::vector<std::vector<int>> assigned_to(h.b_nodes.size());
    for (std::size_t a = 0; a < h.a_nodes.size(); ++a)
        assigned_to[m.center_of[a]].push_back(static_cast<int>(a));

    std::vector<int> cur_b = classes.heavy_nodes();
    for (int b : cur_b) hier.b_level[b] = 0;
    if (!cur_b.empty()) hier.max_level = 0;

    int lvl = 0;
    while (!cur_b.empty()) {
        std::vector<int> next_a;
        for (int b : cur_b)
            for (int a : assigned_to[b])
                if (hier.a_level[a] < 0) {
                    hier.a_level[a] = lvl + 1;
                    next_a.push_back(a);
                }
        if (!next_a.empty()) hier.max_level = lvl + 1;
        std::vector<int> next_b;
        for (int a : next_a)
            for (int b : h.a_nodes[a].nbrs)
                if (b != m.center_of[a] && hier.b_level[b] < 0) {
                    hier.b_level[b] = lvl + 2;
                    next_b.push_back(b);
                }
        if (!next_b.empty()) hier.max_level = lvl + 2;
        std::sort(next_b.begin(), next_b.end());
        cur_b = std::move(next_b);
        lvl += 2;
    }
    return hier;
}

std::optional<RedundantVertex> find_redundant(const AuxBipartite& h, const StarAssignment& m,
                                              const LoadClasses& classes, const Hierarchy& hier,
                                              int p) {
    for (int lvl = 1; lvl <= hier.max_level; lvl += 2) {
        for (std::size_t a = 0; a < h.a_nodes.size(); ++a) {
            if (hier.a_level[a] != lvl) continue;
            for (int b : h.a_nodes[a].nbrs) {
                if (b == m.center_of[a]) continue;
                if (hier.b_level[b] != lvl + 1) continue;
                if (classes.load[b] + h.a_nodes[a].weight < 2LL * p)
                    return RedundantVertex{static_cast<int>(a), b};
            }
        }
    }
    return std::nullopt;
}

StarAssignment eliminate_redundant(StarAssignment m, const AuxBipartite& h, RedundantVertex r) {
    if (r.a_node < 0 || r.a_node >= static_cast<int>(h.a_nodes.size()))
        throw std::invalid_argument("eliminate_redundant: a-node index out of range");
    const auto& nbrs = h.a_nodes[r.a_node].nbrs;
    if (!std::binary_search(nbrs.begin(), nbrs.end(), r.b_node))
        throw std::invalid_argument("eliminate_redundant: pair is not an edge");
    m.center_of[r.a_node] = r.b_node;
    return m;
}

void check_hierarchy(const AuxBipartite& h, const StarAssignment& m, const LoadClasses& classes,
                     const Hierarchy& hier) {
    auto fail = [](const std::string& what) { throw internal_error("hierarchy check: " + what); };

    for (std::size_t b = 0; b < h.b_nodes.size(); ++b) {
        int lvl = hier.b_level[b];
        if (lvl == 0 && classes.cls[b] != LoadClasses::heavy) fail("non-heavy node at level 0");
        if (lvl != 0 && classes.cls[b] == LoadClasses::heavy) fail("heavy node off level 0");
        if (lvl < 0) continue;
        if (lvl % 2 != 0) fail("b-node at odd level");
        if (lvl >= 2) {
            bool supported = false;
            for (int a : h.b_nodes[b].nbrs) {
                if (m.center_of[a] == static_cast<int>(b)) continue;
                int alvl = hier.a_level[a];
                if (alvl >= 0 && alvl < lvl - 1) fail("b-node level not minimal");
                if (alvl == lvl - 1) supported = true;
            }
            if (!supported) fail("b-node with no supporting a-node one level down");
        }
    }
    for (std::size_t a = 0; a < h.a_nodes.size(); ++a) {
        int lvl = hier.a_level[a];
        int center_lvl = hier.b_level[m.center_of[a]];
        if (lvl < 0) {
            if (center_lvl >= 0) fail("a-node missing although its center is leveled");
            continue;
        }
        if (lvl % 2 != 1) fail("a-node at even level");
        if (center_lvl != lvl - 1) fail("a-node level does not follow its center");
    }
}

}  // namespace psep
