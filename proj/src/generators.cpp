#include "psep/generators.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace psep {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph gen_path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph gen_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "grid needs rows >= 1 and cols >= 1");
    auto at = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
        }
    return Graph(rows * cols, edges);
}

Graph gen_spider(int legs, int len) {
    require(legs >= 1 && len >= 1, "spider needs legs >= 1 and len >= 1");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(legs * len + 1, edges);
}

Graph gen_random_edges(int n, long long m, std::uint64_t seed) {
    require(n >= 0, "random graph needs n >= 0");
    long long total = (long long)n * (n - 1) / 2;
    require(m >= 0 && m <= total, "edge count out of range for n vertices");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(total);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        long long j = i + rng() % (total - i);
        std::swap(pairs[i], pairs[j]);
        edges.push_back(pairs[i]);
    }
    return Graph(n, edges);
}

Graph gen_random_prob(int n, int percent, std::uint64_t seed) {
    require(n >= 0, "random graph needs n >= 0");
    require(percent >= 0 && percent <= 100, "percent must be in [0, 100]");
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((int)(rng() % 100) < percent) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace psep
