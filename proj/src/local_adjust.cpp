#include "psep/local_adjust.hpp"

#include <stdexcept>

#include "psep/debug.hpp"
#include "psep/errors.hpp"
#include "psep/oracle.hpp"

namespace psep {

namespace {

bool induces_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    auto [sub, map] = induced_subgraph(g, s);
    return connected_components(sub).size() == 1;
}

}  // namespace

std::optional<int> p_separator_vertex(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("p_separator_vertex: p must be >= 1");
    for (int v = 0; v < g.num_vertices(); ++v)
        if (is_p_size_separator(g, VertexSet{v}, p)) return v;
    return std::nullopt;
}

SplitPair connect_split(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("connect_split: p must be >= 1");
    int n = g.num_vertices();
    if (n <= 3 * p) throw std::invalid_argument("connect_split: graph needs more than 3p vertices");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("connect_split: graph is not connected");
    if (p_separator_vertex(g, p))
        throw std::invalid_argument("connect_split: one vertex already splits the graph");

    VertexSet v1;
    VertexSet v2;
    {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        v2 = VertexSet::from(std::move(all));
    }

    int iterations = 0;
    while (static_cast<int>(v1.size()) <= p) {
        if (++iterations > p + 2)
            throw internal_error("connect_split: growth loop exceeded its iteration bound");

        bool grew = false;
        for (int v : neighborhood(g, v1)) {
            VertexSet trial = v1;
            trial.insert(v);
            if (!is_p_size_separator(g, trial, p)) {
                v1 = std::move(trial);
                grew = true;
                break;
            }
        }
        if (!grew)
            throw internal_error("connect_split: every candidate splits the graph small, "
                                 "which the size precondition rules out");

        std::vector<char> alive(n, 1);
        for (int v : v1) alive[v] = 0;
        auto comps = components_within(g, alive);
        const std::vector<int>* biggest = nullptr;
        for (const auto& comp : comps)
            if (!biggest || comp.size() > biggest->size()) biggest = &comp;
        if (!biggest) throw internal_error("connect_split: the graph vanished while growing");
        v2 = VertexSet::from(*biggest);

        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!v2.contains(v)) rest.push_back(v);
        v1 = VertexSet::from(std::move(rest));

        if (debug_checks_enabled()) {
            if (!induces_connected(g, v1) || !induces_connected(g, v2))
                throw internal_error("connect_split: a side went disconnected mid-loop");
        }
    }

    if (static_cast<int>(v1.size()) < p + 1 || static_cast<int>(v2.size()) < p + 1)
        throw internal_error("connect_split: a side ended up too small");
    if (v1.intersects(v2)) throw internal_error("connect_split: sides overlap");
    if (!induces_connected(g, v1) || !induces_connected(g, v2))
        throw internal_error("connect_split: a side is not connected");
    return {std::move(v1), std::move(v2)};
}

}  // namespace psep
