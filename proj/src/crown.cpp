#include "psep/crown.hpp"

#include <algorithm>
#include <map>

#include "psep/aux_bipartite.hpp"
#include "psep/debug.hpp"
#include "psep/errors.hpp"

namespace psep {

namespace {

// Cheap structural checks on the extraction itself. These hold by
// construction of the fixed point and run on every call.
void check_extraction(const AuxBipartite& h, const StarAssignment& m, const LoadClasses& classes,
                      const Hierarchy& hier) {
    for (std::size_t b = 0; b < h.b_nodes.size(); ++b) {
        if (hier.b_level[b] >= 0 && classes.cls[b] == LoadClasses::light)
            throw internal_error("crown: light node extracted, a redundant vertex remains");
    }
    for (std::size_t a = 0; a < h.a_nodes.size(); ++a) {
        bool a_in = hier.a_level[a] >= 0;
        bool center_in = hier.b_level[m.center_of[a]] >= 0;
        if (a_in != center_in)
            throw internal_error("crown: extracted a-side does not match extracted centers");
        if (a_in)
            for (int b : h.a_nodes[a].nbrs)
                if (hier.b_level[b] < 0)
                    throw internal_error("crown: edge from extracted component to a kept b-vertex");
    }
}

}  // namespace

CrownDecomposition crown(const Graph& g, const VertexSet& b, int p) {
    AuxBipartite h = build_aux(g, b, p);
    StarAssignment m = init_assignment(h);

    CrownDecomposition out;
    out.p = p;
    out.stats.aux_nodes = static_cast<int>(h.a_nodes.size() + h.b_nodes.size());

    long long n = g.num_vertices();
    long long cap = n * n;

    LoadClasses classes = classify(h, m, p);
    Hierarchy hier = build_hierarchy(h, m, classes);
    while (true) {
        if (debug_checks_enabled()) check_hierarchy(h, m, classes, hier);
        auto r = find_redundant(h, m, classes, hier, p);
        if (!r) break;
        if (++out.stats.eliminations > cap)
            throw internal_error("crown: elimination loop exceeded its iteration bound");
        std::vector<int> old_heavy;
        if (debug_checks_enabled()) old_heavy = classes.heavy_nodes();
        m = eliminate_redundant(std::move(m), h, *r);
        classes = classify(h, m, p);
        hier = build_hierarchy(h, m, classes);
        if (debug_checks_enabled()) {
            for (int hb : classes.heavy_nodes())
                if (!std::binary_search(old_heavy.begin(), old_heavy.end(), hb))
                    throw internal_error("crown: elimination created a new heavy node");
        }
    }

    check_extraction(h, m, classes, hier);

    std::vector<int> i_ids;
    for (std::size_t a = 0; a < h.a_nodes.size(); ++a)
        if (hier.a_level[a] >= 0)
            for (int v : h.a_nodes[a].members) i_ids.push_back(v);
    out.i_set = VertexSet::from(std::move(i_ids));

    std::vector<int> c_ids;
    for (std::size_t bn = 0; bn < h.b_nodes.size(); ++bn)
        if (hier.b_level[bn] >= 0) c_ids.push_back(h.b_nodes[bn].vertex);
    out.c_set = VertexSet::from(std::move(c_ids));

    std::vector<int> j_ids;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!out.i_set.contains(v) && !out.c_set.contains(v)) j_ids.push_back(v);
    out.j_set = VertexSet::from(std::move(j_ids));

    for (std::size_t bn = 0; bn < h.b_nodes.size(); ++bn) {
        if (hier.b_level[bn] < 0) continue;
        CrownStar star;
        star.center = h.b_nodes[bn].vertex;
        for (std::size_t a = 0; a < h.a_nodes.size(); ++a)
            if (m.center_of[a] == static_cast<int>(bn)) {
                star.leaf_components.push_back(h.a_nodes[a].members);
                star.total_weight += h.a_nodes[a].weight;
            }
        if (star.total_weight != classes.load[bn])
            throw internal_error("crown: witness weight does not match the load");
        out.witness.push_back(std::move(star));
    }

    if (debug_checks_enabled()) {
        long long kept_a_weight = 0;
        long long kept_b = 0;
        for (std::size_t a = 0; a < h.a_nodes.size(); ++a)
            if (hier.a_level[a] < 0) kept_a_weight += h.a_nodes[a].weight;
        for (std::size_t bn = 0; bn < h.b_nodes.size(); ++bn)
            if (hier.b_level[bn] < 0) ++kept_b;
        if (kept_a_weight > (2LL * p - 1) * kept_b)
            throw internal_error("crown: kept side exceeds the (2p-1) size bound");
    }
    return out;
}

CrownCheck verify_crown(const Graph& g, const CrownDecomposition& cd) {
    CrownCheck res;
    auto flag = [&res](const std::string& msg) {
        res.ok = false;
        res.violations.push_back(msg);
    };

    int n = g.num_vertices();
    std::vector<int> owner(n, 0);
    bool ids_ok = true;
    auto mark = [&](const VertexSet& s, int tag) {
        for (int v : s) {
            if (v < 0 || v >= n) {
                ids_ok = false;
                continue;
            }
            owner[v] += tag;
        }
    };
    mark(cd.i_set, 1);
    mark(cd.c_set, 4);
    mark(cd.j_set, 16);
    if (!ids_ok) flag("a set contains a vertex id outside the graph");
    bool partition_ok = ids_ok;
    for (int v = 0; v < n && partition_ok; ++v)
        if (owner[v] != 1 && owner[v] != 4 && owner[v] != 16) partition_ok = false;
    if (!partition_ok) flag("i, c, j do not partition the vertex set");

    if (cd.p < 1) flag("p is not positive");

    for (int v : cd.i_set) {
        if (v < 0 || v >= n) continue;
        for (int u : g.neighbors(v))
            if (cd.j_set.contains(u)) {
                flag("edge between the i side and the j side");
                goto after_edges;
            }
    }
after_edges:;

    auto [gi, gi_map] = induced_subgraph(g, cd.i_set);
    std::vector<VertexSet> comps;
    for (auto& c : connected_components(gi)) {
        std::vector<int> orig;
        for (int v : c) orig.push_back(gi_map[v]);
        comps.push_back(VertexSet::from(std::move(orig)));
    }
    if (cd.p >= 1)
        for (const auto& c : comps)
            if (static_cast<int>(c.size()) > cd.p) {
                flag("a component of the i side has more than p vertices");
                break;
            }

    std::map<VertexSet, int> comp_index;
    for (std::size_t i = 0; i < comps.size(); ++i) comp_index.emplace(comps[i], static_cast<int>(i));

    std::vector<int> centers;
    std::vector<char> leaf_used(comps.size(), 0);
    for (const auto& star : cd.witness) {
        centers.push_back(star.center);
        if (!cd.c_set.contains(star.center)) flag("witness star centered outside the c side");
        long long total = 0;
        for (const auto& leaf : star.leaf_components) {
            total += static_cast<long long>(leaf.size());
            auto it = comp_index.find(leaf);
            if (it == comp_index.end()) {
                flag("witness leaf is not a whole component of the i side");
                continue;
            }
            if (leaf_used[it->second]) flag("witness leaf used by two stars");
            leaf_used[it->second] = 1;
            bool adjacent = false;
            for (int v : leaf)
                if (g.has_edge(v, star.center)) adjacent = true;
            if (!adjacent) flag("witness leaf not adjacent to its center");
        }
        if (total != star.total_weight) flag("witness star weight mismatch");
        if (total < cd.p) flag("witness star has leaf weight below p");
    }
    std::sort(centers.begin(), centers.end());
    if (std::adjacent_find(centers.begin(), centers.end()) != centers.end())
        flag("two witness stars share a center");
    if (static_cast<int>(centers.size()) != static_cast<int>(cd.c_set.size()))
        flag("witness does not cover every c vertex");

    return res;
}

}  // namespace psep
