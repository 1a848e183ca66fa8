#pragma once

#include <cstdint>

#include "psep/graph.hpp"

namespace psep {

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_grid(int rows, int cols);

// A center vertex with `legs` paths of `len` vertices hanging off it, so
// legs * len + 1 vertices total.
Graph gen_spider(int legs, int len);

// Uniform graph with exactly m edges drawn without replacement from all
// n*(n-1)/2 pairs. Throws std::invalid_argument when m is out of range.
Graph gen_random_edges(int n, long long m, std::uint64_t seed);

// Each pair becomes an edge independently with probability percent/100.
Graph gen_random_prob(int n, int percent, std::uint64_t seed);

}  // namespace psep
