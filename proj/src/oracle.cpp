#include "psep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace psep {

namespace {

void require_p(int p) {
    if (p < 1) throw std::invalid_argument("oracle: p must be >= 1");
}

// Greedy count of vertex-disjoint connected (p+1)-subgraphs among alive
// vertices. Any p-size separator must delete at least one vertex per counted
// subgraph, so this is a sound lower bound for pruning. Stops early once the
// count reaches stop_at.
int packing_lower_bound(const Graph& g, std::vector<char> alive, int p, int stop_at) {
    int count = 0;
    while (count < stop_at) {
        bool found = false;
        for (const auto& comp : components_within(g, alive)) {
            if (static_cast<int>(comp.size()) <= p) continue;
            auto part = bfs_prefix(g, comp.front(), alive, p + 1);
            for (int v : part) alive[v] = 0;
            ++count;
            found = true;
            break;
        }
        if (!found) break;
    }
    return count;
}

// Separators this large are found faster by searching for the kept set.
constexpr int kept_engine_threshold = 10;

// The complement view: a set is deletable down to components of at most p
// vertices iff the kept rest induces only such components. Finding a maximum
// kept set is far cheaper on dense graphs, where separators are large but
// kept sets are small. 64-bit masks limit this engine to n <= 64.
struct DispersedSearch {
    int n;
    int p;
    std::vector<std::uint64_t> adj;
    std::vector<std::uint64_t> cliques;  // greedy cover, ascending seed ids
    std::vector<int> clique_of;
    std::vector<int> kept_in_clique;
    std::vector<int> order;  // branching order, degree descending
    std::uint64_t best_mask = 0;
    int best = -1;

    DispersedSearch(const Graph& g, int pp) : n(g.num_vertices()), p(pp) {
        adj.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;

        clique_of.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            if (clique_of[v] >= 0) continue;
            std::uint64_t q = std::uint64_t{1} << v;
            clique_of[v] = (int)cliques.size();
            for (int w = v + 1; w < n; ++w)
                if (clique_of[w] < 0 && (adj[w] & q) == q) {
                    q |= std::uint64_t{1} << w;
                    clique_of[w] = (int)cliques.size();
                }
            cliques.push_back(q);
        }
        kept_in_clique.assign(cliques.size(), 0);

        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = std::popcount(adj[a]);
            int db = std::popcount(adj[b]);
            return da != db ? da > db : a < b;
        });
    }

    // Component of v inside mask, stopping once it grows past p vertices.
    int component_size(int v, std::uint64_t mask) const {
        std::uint64_t comp = std::uint64_t{1} << v;
        for (;;) {
            std::uint64_t grown = comp;
            std::uint64_t frontier = comp;
            while (frontier) {
                int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= adj[x] & mask;
            }
            if (grown == comp) return std::popcount(comp);
            comp = grown;
            if (std::popcount(comp) > p) return p + 1;
        }
    }

    int upper_bound(std::uint64_t undecided) const {
        int ub = 0;
        for (std::size_t q = 0; q < cliques.size(); ++q) {
            int room = p - kept_in_clique[q];
            if (room <= 0) continue;
            int avail = std::popcount(cliques[q] & undecided);
            ub += avail < room ? avail : room;
        }
        return ub;
    }

    void run(std::uint64_t undecided, std::uint64_t kept, int kept_cnt, int next) {
        if (kept_cnt + upper_bound(undecided) <= best) return;
        while (next < n && !(undecided >> order[next] & 1)) ++next;
        if (next == n) {
            if (kept_cnt > best) {
                best = kept_cnt;
                best_mask = kept;
            }
            return;
        }
        int v = order[next];
        std::uint64_t bit = std::uint64_t{1} << v;
        run(undecided ^ bit, kept, kept_cnt, next + 1);
        if (component_size(v, kept | bit) <= p) {
            ++kept_in_clique[clique_of[v]];
            run(undecided ^ bit, kept | bit, kept_cnt + 1, next + 1);
            --kept_in_clique[clique_of[v]];
        }
    }

    void seed_best(std::uint64_t seed_mask, int seed_cnt) {
        best = seed_cnt;
        best_mask = seed_mask;
    }
};

VertexSet greedy_kept(const Graph& g, int p) {
    int n = g.num_vertices();
    VertexSet kept;
    std::vector<char> mask(n, 0);
    for (int v = 0; v < n; ++v) {
        mask[v] = 1;
        bool fits = true;
        for (const auto& comp : components_within(g, mask))
            if (static_cast<int>(comp.size()) > p) {
                fits = false;
                break;
            }
        if (!fits) mask[v] = 0;
    }
    for (int v = 0; v < n; ++v)
        if (mask[v]) kept.insert(v);
    return kept;
}

struct BranchSearch {
    const Graph& g;
    int p;
    std::vector<char> alive;
    std::vector<int> chosen;

    BranchSearch(const Graph& graph, int pp)
        : g(graph), p(pp), alive(graph.num_vertices(), 1) {}

    bool run(int budget) {
        auto comps = components_within(g, alive);
        const std::vector<int>* worst = nullptr;
        for (const auto& comp : comps) {
            if (static_cast<int>(comp.size()) <= p) continue;
            if (!worst || comp.size() > worst->size()) worst = &comp;
        }
        if (!worst) return true;
        if (budget <= 0) return false;
        if (packing_lower_bound(g, alive, p, budget + 1) > budget) return false;
        auto t = bfs_prefix(g, worst->front(), alive, p + 1);
        std::sort(t.begin(), t.end());
        for (int v : t) {
            alive[v] = 0;
            chosen.push_back(v);
            if (run(budget - 1)) return true;
            chosen.pop_back();
            alive[v] = 1;
        }
        return false;
    }
};

}  // namespace

bool is_p_size_separator(const Graph& g, const VertexSet& s, int p) {
    require_p(p);
    std::vector<char> alive(g.num_vertices(), 1);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("is_p_size_separator: vertex id out of range");
        alive[v] = 0;
    }
    for (const auto& comp : components_within(g, alive))
        if (static_cast<int>(comp.size()) > p) return false;
    return true;
}

std::optional<OracleResult> min_p_separator(const Graph& g, int p, std::optional<int> cap) {
    require_p(p);
    int n = g.num_vertices();
    int limit = cap.value_or(n);
    if (limit < 0) throw std::invalid_argument("min_p_separator: negative cap");
    limit = std::min(limit, n);

    std::vector<char> all(n, 1);
    int lower = packing_lower_bound(g, all, p, n + 1);
    if (lower > limit) return std::nullopt;

    auto finish = [](VertexSet sep) {
        OracleResult res;
        res.size = static_cast<int>(sep.size());
        res.separator = std::move(sep);
        res.optimal = true;
        return res;
    };
    auto complement = [n](auto keeps) {
        VertexSet sep;
        for (int v = 0; v < n; ++v)
            if (!keeps(v)) sep.insert(v);
        return sep;
    };

    VertexSet kept = greedy_kept(g, p);
    int upper = n - static_cast<int>(kept.size());
    if (lower == upper) {
        if (upper > limit) return std::nullopt;
        return finish(complement([&](int v) { return kept.contains(v); }));
    }

    if (n <= 64 && upper >= kept_engine_threshold) {
        DispersedSearch search(g, p);
        std::uint64_t seed = 0;
        for (int v : kept) seed |= std::uint64_t{1} << v;
        search.seed_best(seed, static_cast<int>(kept.size()));
        std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        search.run(full, 0, 0, 0);
        if (n - search.best > limit) return std::nullopt;
        return finish(complement([&](int v) { return search.best_mask >> v & 1; }));
    }

    for (int size = lower; size <= std::min(limit, upper - 1); ++size) {
        BranchSearch search(g, p);
        if (search.run(size)) {
            OracleResult res;
            res.separator = VertexSet::from(search.chosen);
            res.size = static_cast<int>(res.separator.size());
            res.optimal = true;
            return res;
        }
    }
    if (upper > limit) return std::nullopt;
    return finish(complement([&](int v) { return kept.contains(v); }));
}

OracleResult min_p_separator_exhaustive(const Graph& g, int p) {
    require_p(p);
    int n = g.num_vertices();
    if (n > 25) throw std::invalid_argument("min_p_separator_exhaustive: more than 25 vertices");

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    auto feasible = [&](std::uint32_t chosen) {
        std::uint32_t keep = full & ~chosen;
        while (keep) {
            std::uint32_t comp = keep & (~keep + 1);  // lowest alive bit
            for (;;) {
                std::uint32_t frontier = comp;
                std::uint32_t grown = comp;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grown |= adj[v] & keep;
                }
                if (grown == comp) break;
                comp = grown;
                if (std::popcount(comp) > p) return false;
            }
            if (std::popcount(comp) > p) return false;
            keep &= ~comp;
        }
        return true;
    };

    for (int size = 0; size <= n; ++size) {
        if (size == 0) {
            if (feasible(0)) return {VertexSet{}, 0, true};
            continue;
        }
        // Walk the size-element subsets in lexicographic order of their
        // ascending id lists, so the first hit is the canonical answer.
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            std::uint32_t mask = 0;
            for (int v : idx) mask |= std::uint32_t{1} << v;
            if (feasible(mask)) return {VertexSet::from(idx), size, true};
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // Unreachable: deleting everything is always a separator.
    return {VertexSet{}, n, true};
}

}  // namespace psep
