#include "psep/kernelize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "psep/debug.hpp"
#include "psep/errors.hpp"

namespace psep {

namespace {

bool induces_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> alive(g.num_vertices(), 0);
    for (int v : s) alive[v] = 1;
    return bfs_prefix(g, s.front(), alive, -1).size() == s.size();
}

std::vector<VertexSet> components_outside(const Graph& g, const VertexSet& b) {
    std::vector<char> alive(g.num_vertices(), 1);
    for (int v : b) alive[v] = 0;
    std::vector<VertexSet> out;
    for (auto& comp : components_within(g, alive)) out.push_back(VertexSet::from(comp));
    return out;
}

// Drops hanging pieces from one split side until it has fewer than 2p+1
// vertices, keeping the side connected and keeping all of the old base's
// vertices that landed in it. Stops early when no piece can go.
VertexSet trim_side(const Graph& g, const VertexSet& side, const VertexSet& s, int p) {
    VertexSet cur = side;
    while ((int)cur.size() >= 2 * p + 1) {
        std::vector<char> alive(g.num_vertices(), 0);
        for (int v : cur) alive[v] = 1;
        for (int v : s) alive[v] = 0;
        bool removed = false;
        for (auto& piece : components_within(g, alive)) {
            VertexSet rest = cur.minus(VertexSet::from(piece));
            if ((int)rest.size() >= p + 1 && induces_connected(g, rest)) {
                cur = std::move(rest);
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    return cur;
}

// Connected p+1-subset of side grown from an s-vertex, preferring s-vertices
// first and vertices of reserved components last. Ties go to the smaller id.
VertexSet picky_truncate(const Graph& g, const VertexSet& side, const VertexSet& s,
                         const std::vector<char>& reserved, int target) {
    int seed = -1;
    for (int v : side) {
        if (s.contains(v)) {
            seed = v;
            break;
        }
    }
    if (seed < 0) seed = side.front();
    std::vector<char> in_side(g.num_vertices(), 0);
    for (int v : side) in_side[v] = 1;
    std::vector<char> picked(g.num_vertices(), 0);
    std::vector<int> chosen{seed};
    picked[seed] = 1;
    while ((int)chosen.size() < target) {
        int best = -1;
        int best_class = 3;
        for (int v : chosen) {
            for (int w : g.neighbors(v)) {
                if (!in_side[w] || picked[w]) continue;
                int cls = s.contains(w) ? 0 : (reserved[w] ? 2 : 1);
                if (cls < best_class || (cls == best_class && (best < 0 || w < best))) {
                    best = w;
                    best_class = cls;
                }
            }
        }
        if (best < 0) throw internal_error("extension: split side cannot host a full base");
        picked[best] = 1;
        chosen.push_back(best);
    }
    return VertexSet::from(std::move(chosen));
}

}  // namespace

VertexSet BaseSet::all_vertices() const {
    std::vector<int> ids;
    for (const auto& b : bases)
        for (int v : b.vertices) ids.push_back(v);
    return VertexSet::from(std::move(ids));
}

int BaseSet::single_count() const {
    int count = 0;
    for (const auto& b : bases)
        if (b.kind == Base::single_vertex) ++count;
    return count;
}

long long SingleWitness::total(int v) const {
    auto it = stars.find(v);
    if (it == stars.end()) return 0;
    long long sum = 0;
    for (const auto& comp : it->second) sum += (long long)comp.size();
    return sum;
}

ContractedGraph contract(const Graph& g, const BaseSet& bs) {
    const int n = g.num_vertices();
    std::vector<int> base_at(n, -1);
    for (std::size_t i = 0; i < bs.bases.size(); ++i) {
        const Base& b = bs.bases[i];
        if (b.vertices.empty()) throw std::invalid_argument("contract: empty base");
        for (int v : b.vertices) {
            if (v < 0 || v >= n) throw std::invalid_argument("contract: base vertex out of range");
            if (base_at[v] >= 0) throw std::invalid_argument("contract: bases overlap");
            base_at[v] = (int)i;
        }
    }

    ContractedGraph cg;
    cg.to_contracted.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (base_at[v] >= 0 && bs.bases[base_at[v]].kind == Base::group) continue;
        cg.to_contracted[v] = (int)cg.to_original.size();
        cg.to_original.push_back(v);
        cg.base_of.push_back(base_at[v]);
    }
    std::vector<int> group_vertex(bs.bases.size(), -1);
    for (std::size_t i = 0; i < bs.bases.size(); ++i) {
        if (bs.bases[i].kind != Base::group) continue;
        group_vertex[i] = (int)cg.to_original.size();
        cg.to_original.push_back(-1);
        cg.base_of.push_back((int)i);
        for (int v : bs.bases[i].vertices) cg.to_contracted[v] = group_vertex[i];
    }

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) {
            if (w <= v) continue;
            edges.emplace_back(cg.to_contracted[v], cg.to_contracted[w]);
        }
    }
    cg.graph = Graph((int)cg.to_original.size(), edges);

    for (std::size_t i = 0; i < bs.bases.size(); ++i) {
        if (bs.bases[i].kind == Base::group)
            cg.head.push_back(group_vertex[i]);
        else
            cg.head.push_back(cg.to_contracted[bs.bases[i].vertices.front()]);
    }
    std::sort(cg.head.begin(), cg.head.end());
    return cg;
}

AssociateSubgraph associate_subgraph(const Graph& g, const BaseSet& bs, int base_index) {
    if (base_index < 0 || base_index >= (int)bs.bases.size())
        throw std::invalid_argument("associate_subgraph: base index out of range");
    const VertexSet& s = bs.bases[base_index].vertices;

    std::vector<char> in_s(g.num_vertices(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> ids(s.ids());
    for (const auto& comp : components_outside(g, bs.all_vertices())) {
        bool touches = false;
        for (int v : comp) {
            for (int w : g.neighbors(v)) {
                if (in_s[w]) {
                    touches = true;
                    break;
                }
            }
            if (touches) break;
        }
        if (!touches) continue;
        for (int v : comp) ids.push_back(v);
    }

    AssociateSubgraph out;
    out.vertices = VertexSet::from(std::move(ids));
    auto [sub, back] = induced_subgraph(g, out.vertices);
    out.graph = std::move(sub);
    out.to_original = std::move(back);
    return out;
}

std::optional<BaseSet> extension_operation(const Graph& g, const BaseSet& bs, int base_index,
                                           const SplitPair& split, SingleWitness& witness,
                                           int p) {
    if (p < 1) throw std::invalid_argument("extension_operation: p must be at least 1");
    if (base_index < 0 || base_index >= (int)bs.bases.size())
        throw std::invalid_argument("extension_operation: base index out of range");
    if (bs.bases[base_index].kind != Base::group)
        throw std::invalid_argument("extension_operation: only group bases can be split");
    const VertexSet& s = bs.bases[base_index].vertices;

    for (const auto& b : bs.bases) {
        if (b.kind != Base::single_vertex) continue;
        if (witness.stars.find(b.vertices.front()) == witness.stars.end())
            throw internal_error("extension: single base without reserved components");
    }

    VertexSet t1 = trim_side(g, split.v1, s, p);
    VertexSet t2 = trim_side(g, split.v2, s, p);
    if ((int)t1.size() < p + 1 || (int)t2.size() < p + 1)
        throw internal_error("extension: a split side is too small");

    std::vector<std::pair<VertexSet, VertexSet>> candidates;
    candidates.emplace_back(connected_truncate(g, t1, p + 1), connected_truncate(g, t2, p + 1));
    if (!witness.stars.empty()) {
        std::vector<char> reserved(g.num_vertices(), 0);
        for (const auto& [v, leaves] : witness.stars)
            for (const auto& leaf : leaves)
                for (int x : leaf) reserved[x] = 1;
        candidates.emplace_back(picky_truncate(g, t1, s, reserved, p + 1),
                                picky_truncate(g, t2, s, reserved, p + 1));
    }

    for (auto& [n1, n2] : candidates) {
        if (debug_checks_enabled()) {
            if ((int)n1.size() != p + 1 || (int)n2.size() != p + 1 || n1.intersects(n2) ||
                !induces_connected(g, n1) || !induces_connected(g, n2))
                throw internal_error("extension: malformed replacement bases");
        }
        VertexSet blocked = n1.unite(n2);
        bool feasible = true;
        for (const auto& [v, leaves] : witness.stars) {
            long long usable = 0;
            for (const auto& leaf : leaves)
                if (!leaf.intersects(blocked)) usable += (long long)leaf.size();
            if (usable < p) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        BaseSet out;
        for (std::size_t i = 0; i < bs.bases.size(); ++i) {
            if ((int)i == base_index) {
                out.bases.push_back({Base::group, n1});
                out.bases.push_back({Base::group, n2});
                continue;
            }
            const Base& b = bs.bases[i];
            if (b.kind == Base::group) {
                out.bases.push_back(b);
                continue;
            }
            int v = b.vertices.front();
            std::vector<int> pool_ids{v};
            for (const auto& leaf : witness.stars.at(v)) {
                if (leaf.intersects(blocked)) continue;
                for (int x : leaf) pool_ids.push_back(x);
            }
            VertexSet grown = connected_truncate(g, VertexSet::from(std::move(pool_ids)), p + 1);
            out.bases.push_back({Base::group, grown});
        }
        witness.stars.clear();
        return out;
    }
    return std::nullopt;
}

void check_base_properties(const Graph& g, const BaseSet& bs, const SingleWitness& witness,
                           int p) {
    const int n = g.num_vertices();
    std::vector<char> in_base(n, 0);
    for (const auto& b : bs.bases) {
        for (int v : b.vertices) {
            if (v < 0 || v >= n) throw internal_error("base check: vertex out of range");
            if (in_base[v]) throw internal_error("base check: bases overlap");
            in_base[v] = 1;
        }
        if (b.kind == Base::single_vertex) {
            if (b.vertices.size() != 1) throw internal_error("base check: oversized single base");
        } else {
            if ((int)b.vertices.size() != p + 1)
                throw internal_error("base check: group base is not a p+1 set");
            if (!induces_connected(g, b.vertices))
                throw internal_error("base check: group base is not connected");
        }
    }

    std::vector<VertexSet> comps = components_outside(g, bs.all_vertices());
    for (const auto& comp : comps) {
        if ((int)comp.size() > p)
            throw internal_error("base check: oversized component outside the bases");
    }
    std::vector<std::pair<int, const VertexSet*>> comp_by_front;
    for (const auto& comp : comps) comp_by_front.emplace_back(comp.front(), &comp);
    std::sort(comp_by_front.begin(), comp_by_front.end());

    for (const auto& [v, leaves] : witness.stars) {
        bool owner_found = false;
        for (const auto& b : bs.bases) {
            if (b.kind == Base::single_vertex && b.vertices.front() == v) {
                owner_found = true;
                break;
            }
        }
        if (!owner_found) throw internal_error("base check: reserved components without an owner");
    }

    std::vector<char> in_leaf(n, 0);
    for (const auto& b : bs.bases) {
        if (b.kind != Base::single_vertex) continue;
        int v = b.vertices.front();
        auto it = witness.stars.find(v);
        if (it == witness.stars.end())
            throw internal_error("base check: single base without reserved components");
        long long total = 0;
        for (const auto& leaf : it->second) {
            auto pos = std::lower_bound(comp_by_front.begin(), comp_by_front.end(),
                                        std::make_pair(leaf.front(), (const VertexSet*)nullptr),
                                        [](const auto& a, const auto& b) { return a.first < b.first; });
            if (pos == comp_by_front.end() || pos->first != leaf.front() || *pos->second != leaf)
                throw internal_error("base check: reserved set is not a full outside component");
            bool adjacent = false;
            for (int x : leaf) {
                if (adjacent) break;
                for (int w : g.neighbors(x)) {
                    if (w == v) {
                        adjacent = true;
                        break;
                    }
                }
            }
            if (!adjacent) throw internal_error("base check: reserved component misses its owner");
            for (int x : leaf) {
                if (in_leaf[x]) throw internal_error("base check: reserved components overlap");
                in_leaf[x] = 1;
            }
            total += (long long)leaf.size();
        }
        if (total < 4LL * p)
            throw internal_error("base check: single base cannot pay for a full group");
    }
}

CrownDecomposition scc(const Graph& g, int p, SccStats* stats) {
    if (p < 1) throw std::invalid_argument("scc: p must be at least 1");
    const int n = g.num_vertices();
    if (n <= p) throw std::invalid_argument("scc: need more than p vertices");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("scc: the graph must be connected");

    BaseSet bs;
    for (auto& part : maximal_p1_packing(g, p).parts) bs.bases.push_back({Base::group, part});
    SingleWitness witness;

    SccStats st;
    st.extension_cap = n;
    st.crown_rounds_cap = (long long)n * (long long)n;

    auto note_extension = [&]() {
        if (++st.extension_steps > st.extension_cap)
            throw internal_error("scc: extension loop exceeded its bound");
    };
    auto repack = [&]() {
        for (;;) {
            std::vector<char> alive(n, 1);
            for (int v : bs.all_vertices()) alive[v] = 0;
            bool packed = false;
            for (auto& comp : components_within(g, alive)) {
                if ((int)comp.size() <= p) continue;
                bs.bases.push_back(
                    {Base::group, VertexSet::from(bfs_prefix(g, comp.front(), alive, p + 1))});
                ++st.repacked_bases;
                packed = true;
                break;
            }
            if (!packed) break;
        }
    };
    auto run_checks = [&]() {
        if (debug_checks_enabled()) check_base_properties(g, bs, witness, p);
    };
    auto lift_split = [&](const AssociateSubgraph& asg) {
        SplitPair local = connect_split(asg.graph, p);
        SplitPair lifted;
        for (int v : local.v1) lifted.v1.insert(asg.to_original[v]);
        for (int v : local.v2) lifted.v2.insert(asg.to_original[v]);
        return lifted;
    };

    CrownDecomposition result;
    for (;;) {
        // split bases while some base has a large surrounding subgraph that no
        // single vertex can shatter
        for (bool progressed = true; progressed;) {
            progressed = false;
            for (std::size_t bi = 0; bi < bs.bases.size(); ++bi) {
                if (bs.bases[bi].kind != Base::group) continue;
                AssociateSubgraph asg = associate_subgraph(g, bs, (int)bi);
                if (asg.graph.num_vertices() <= 3 * p) continue;
                if (p_separator_vertex(asg.graph, p)) continue;
                auto next = extension_operation(g, bs, (int)bi, lift_split(asg), witness, p);
                if (!next) continue;
                bs = std::move(*next);
                repack();
                note_extension();
                run_checks();
                progressed = true;
                break;
            }
        }

        ContractedGraph cg = contract(g, bs);
        CrownDecomposition cd = crown(cg.graph, VertexSet::from(cg.head), 4 * p);
        if (++st.crown_rounds > st.crown_rounds_cap)
            throw internal_error("scc: crown loop exceeded its bound");
        st.eliminations += cd.stats.eliminations;

        // kept single bases get fresh reserved components from their stars
        for (const auto& b : bs.bases) {
            if (b.kind != Base::single_vertex) continue;
            int v = b.vertices.front();
            int cu = cg.to_contracted[v];
            if (!cd.c_set.contains(cu)) continue;
            for (const auto& star : cd.witness) {
                if (star.center != cu) continue;
                std::vector<VertexSet> leaves;
                for (const auto& leaf : star.leaf_components) {
                    std::vector<int> ids;
                    for (int x : leaf) ids.push_back(cg.to_original[x]);
                    leaves.push_back(VertexSet::from(std::move(ids)));
                }
                witness.stars[v] = std::move(leaves);
                break;
            }
        }
        run_checks();

        int group_u = -1;
        for (int u : cd.c_set) {
            if (cg.base_of[u] >= 0 && bs.bases[cg.base_of[u]].kind == Base::group) {
                group_u = u;
                break;
            }
        }
        if (group_u < 0) {
            std::vector<int> iv, cv;
            for (int u : cd.i_set) iv.push_back(cg.to_original[u]);
            for (int u : cd.c_set) cv.push_back(cg.to_original[u]);
            result.i_set = VertexSet::from(std::move(iv));
            result.c_set = VertexSet::from(std::move(cv));
            std::vector<int> jv;
            for (int v = 0; v < n; ++v)
                if (!result.i_set.contains(v) && !result.c_set.contains(v)) jv.push_back(v);
            result.j_set = VertexSet::from(std::move(jv));
            for (const auto& star : cd.witness) {
                CrownStar lifted;
                lifted.center = cg.to_original[star.center];
                lifted.total_weight = star.total_weight;
                for (const auto& leaf : star.leaf_components) {
                    std::vector<int> ids;
                    for (int x : leaf) ids.push_back(cg.to_original[x]);
                    lifted.leaf_components.push_back(VertexSet::from(std::move(ids)));
                }
                result.witness.push_back(std::move(lifted));
            }
            result.p = p;
            result.stats.eliminations = st.eliminations;
            result.stats.aux_nodes = cd.stats.aux_nodes;
            break;
        }

        // a group base the crown wants to keep must shrink to one vertex whose
        // removal shatters its surroundings; if no such vertex exists the base
        // can still be split, which also makes progress
        int bi = cg.base_of[group_u];
        AssociateSubgraph asg = associate_subgraph(g, bs, bi);
        auto sep = p_separator_vertex(asg.graph, p);
        if (!sep) {
            auto next = extension_operation(g, bs, bi, lift_split(asg), witness, p);
            if (!next)
                throw internal_error("scc: kept group base can neither shrink nor split");
            bs = std::move(*next);
            repack();
            note_extension();
            run_checks();
            continue;
        }

        int v_new = asg.to_original[*sep];
        std::vector<char> alive(asg.graph.num_vertices(), 1);
        alive[*sep] = 0;
        std::vector<VertexSet> x_comps;
        for (auto& piece : components_within(asg.graph, alive)) {
            std::vector<int> ids;
            for (int x : piece) ids.push_back(asg.to_original[x]);
            x_comps.push_back(VertexSet::from(std::move(ids)));
        }
        if (debug_checks_enabled()) {
            for (const auto& xc : x_comps)
                if ((int)xc.size() > p)
                    throw internal_error("scc: dissolved base left an oversized component");
        }

        // the dissolved base rearranges nearby components; singles that lose a
        // reserved component take a replacement from the new layout until they
        // are paid up again, and the shrunk base keeps the rest
        std::vector<char> claimed(x_comps.size(), 0);
        for (auto& [w, leaves] : witness.stars) {
            bool touched = false;
            for (const auto& leaf : leaves) {
                if (leaf.intersects(asg.vertices)) {
                    touched = true;
                    break;
                }
            }
            if (!touched) continue;
            std::vector<VertexSet> rebuilt;
            long long total = 0;
            for (const auto& leaf : leaves) {
                if (leaf.intersects(asg.vertices)) continue;
                total += (long long)leaf.size();
                rebuilt.push_back(leaf);
            }
            for (const auto& leaf : leaves) {
                if (total >= 4LL * p) break;
                if (!leaf.intersects(asg.vertices)) continue;
                for (std::size_t i = 0; i < x_comps.size(); ++i) {
                    if (claimed[i] || !x_comps[i].intersects(leaf)) continue;
                    claimed[i] = 1;
                    total += (long long)x_comps[i].size();
                    rebuilt.push_back(x_comps[i]);
                    break;
                }
            }
            leaves = std::move(rebuilt);
        }
        bs.bases[bi] = {Base::single_vertex, VertexSet{v_new}};
        std::vector<VertexSet> mine;
        for (std::size_t i = 0; i < x_comps.size(); ++i)
            if (!claimed[i]) mine.push_back(x_comps[i]);
        witness.stars[v_new] = std::move(mine);
        run_checks();
    }

    if (stats) {
        st.final_bases = bs;
        *stats = st;
    }
    return result;
}

namespace {

CrownStar relabel_star(const CrownStar& star, const std::vector<int>& back) {
    CrownStar out;
    out.center = back[star.center];
    out.total_weight = star.total_weight;
    for (const auto& leaf : star.leaf_components) {
        std::vector<int> ids;
        for (int x : leaf) ids.push_back(back[x]);
        out.leaf_components.push_back(VertexSet::from(std::move(ids)));
    }
    return out;
}

void verify_outcome(const Graph& g, const KernelOutcome& out) {
    if (!debug_checks_enabled()) return;
    CrownCheck chk = verify_crown(g, out.decomposition);
    if (!chk.ok) throw internal_error("kernelize: produced decomposition fails verification");
}

}  // namespace

KernelOutcome kernelize(const Graph& g, int p, std::optional<int> k) {
    if (p < 1) throw std::invalid_argument("kernelize: p must be at least 1");
    if (k && *k < 0) throw std::invalid_argument("kernelize: k must be nonnegative");
    const int n = g.num_vertices();

    KernelOutcome out;
    out.mode = KernelOutcome::linear;
    VertexSet dropped, forced;
    std::vector<CrownStar> stars;
    for (const auto& comp : connected_components(g)) {
        if ((int)comp.size() <= p) {
            dropped = dropped.unite(comp);
            ++out.stats.stripped_components;
            continue;
        }
        auto [sub, back] = induced_subgraph(g, comp);
        SccStats st;
        CrownDecomposition cd = scc(sub, p, &st);
        ++out.stats.components_processed;
        out.stats.extension_steps += st.extension_steps;
        out.stats.crown_rounds += st.crown_rounds;
        out.stats.eliminations += st.eliminations;
        out.stats.repacked_bases += st.repacked_bases;
        for (int v : cd.i_set) dropped.insert(back[v]);
        for (int v : cd.c_set) forced.insert(back[v]);
        for (const auto& star : cd.witness) stars.push_back(relabel_star(star, back));
    }

    std::vector<int> jv;
    for (int v = 0; v < n; ++v)
        if (!dropped.contains(v) && !forced.contains(v)) jv.push_back(v);
    VertexSet j = VertexSet::from(std::move(jv));

    auto [kg, kmap] = induced_subgraph(g, j);
    out.kernel_graph = std::move(kg);
    out.kernel_to_original = std::move(kmap);
    out.forced = forced;
    out.budget_used = (int)forced.size();
    out.decomposition.i_set = std::move(dropped);
    out.decomposition.c_set = std::move(forced);
    out.decomposition.j_set = std::move(j);
    out.decomposition.witness = std::move(stars);
    out.decomposition.p = p;
    out.decomposition.stats.eliminations = out.stats.eliminations;
    if (k) {
        out.size_bound = 9LL * p * ((long long)*k - out.budget_used);
        if (out.budget_used > *k ||
            (long long)out.decomposition.j_set.size() > out.size_bound)
            out.verdict = KernelOutcome::no_instance;
    }
    verify_outcome(g, out);
    return out;
}

KernelOutcome kernelize_quadratic(const Graph& g, int p, std::optional<int> k) {
    if (p < 1) throw std::invalid_argument("kernelize_quadratic: p must be at least 1");
    if (k && *k < 0) throw std::invalid_argument("kernelize_quadratic: k must be nonnegative");
    const int n = g.num_vertices();

    KernelOutcome out;
    out.mode = KernelOutcome::quadratic;
    out.decomposition.p = p;

    SubgraphPacking packing = maximal_p1_packing(g, p);
    if (k) out.size_bound = 2LL * p * (p + 1) * (long long)*k;
    if (k && (int)packing.parts.size() > *k) {
        // more disjoint p+1-subgraphs than the budget can break
        out.verdict = KernelOutcome::no_instance;
        out.kernel_graph = g;
        out.kernel_to_original.resize(n);
        for (int v = 0; v < n; ++v) out.kernel_to_original[v] = v;
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        out.decomposition.j_set = VertexSet::from(std::move(all));
        return out;
    }

    VertexSet b = packing.all_vertices();
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    VertexSet alive = VertexSet::from(std::move(all));
    VertexSet dropped, forced;
    std::vector<CrownStar> stars;

    auto strip_unguarded = [&]() {
        std::vector<char> mark(n, 0);
        for (int v : alive) mark[v] = 1;
        for (auto& comp : components_within(g, mark)) {
            bool guarded = false;
            for (int v : comp) {
                if (b.contains(v)) {
                    guarded = true;
                    break;
                }
            }
            if (guarded) continue;
            if ((int)comp.size() > p)
                throw internal_error("kernelize_quadratic: oversized unguarded component");
            for (int v : comp) {
                dropped.insert(v);
                alive.erase(v);
            }
            ++out.stats.stripped_components;
        }
    };

    strip_unguarded();
    for (;;) {
        long long a_size = (long long)alive.size() - (long long)b.size();
        if (a_size <= (2LL * p - 1) * (long long)b.size()) break;
        if (++out.stats.reduction_rounds > n)
            throw internal_error("kernelize_quadratic: reduction loop exceeded its bound");

        auto [sub, back] = induced_subgraph(g, alive);
        VertexSet local_b;
        for (std::size_t i = 0; i < back.size(); ++i)
            if (b.contains(back[i])) local_b.insert((int)i);
        CrownDecomposition cd = crown(sub, local_b, p);
        ++out.stats.crown_rounds;
        out.stats.eliminations += cd.stats.eliminations;
        if (cd.c_set.empty())
            throw internal_error("kernelize_quadratic: reduction round made no progress");

        for (int v : cd.i_set) {
            dropped.insert(back[v]);
            alive.erase(back[v]);
        }
        for (int v : cd.c_set) {
            int orig = back[v];
            forced.insert(orig);
            alive.erase(orig);
            b.erase(orig);
        }
        for (const auto& star : cd.witness) stars.push_back(relabel_star(star, back));
        strip_unguarded();
    }

    auto [kg, kmap] = induced_subgraph(g, alive);
    out.kernel_graph = std::move(kg);
    out.kernel_to_original = std::move(kmap);
    out.forced = forced;
    out.budget_used = (int)forced.size();
    out.decomposition.i_set = std::move(dropped);
    out.decomposition.c_set = std::move(forced);
    out.decomposition.j_set = std::move(alive);
    out.decomposition.witness = std::move(stars);
    if (k && (out.budget_used > *k || (long long)out.decomposition.j_set.size() > out.size_bound))
        out.verdict = KernelOutcome::no_instance;
    verify_outcome(g, out);
    return out;
}

}  // namespace psep
