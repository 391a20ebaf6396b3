#pragma once

#include <cstdint>
#include <optional>

#include "eog/graph.hpp"
#include "eog/path.hpp"

namespace eog {

struct OracleResult {
    int optimum = 0;
    IncreasingPath witness;
    std::uint64_t explored = 0;
    bool empty_feasible_set = false; // set when a height floor rules out the start edge
};

// Exact longest simple path with a monotone rank sequence. Exhaustive DFS;
// refuses above the vertex guard instead of approximating.
OracleResult longest_monotone_path(const GraphView& g, int vertex_guard = 14);

// Exact longest increasing path that starts with edge e, optionally using only
// edges of height >= height_floor (heights measured in g).
OracleResult longest_increasing_from(const GraphView& g, EdgeId e,
                                     std::optional<int> height_floor = std::nullopt,
                                     int vertex_guard = 14);

// Minimum over all |E|! edge-orderings of the longest monotone path.
// Guarded at 8 edges by default; can be pushed to 10 explicitly.
int altitude(const OrderedGraph& shape, int edge_guard = 8);

} // namespace eog
