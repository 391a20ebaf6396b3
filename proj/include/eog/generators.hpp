#pragma once

#include <cstdint>
#include <vector>

#include "eog/graph.hpp"

namespace eog {

// K_n with ranks in lexicographic order of (u, v), u < v
OrderedGraph complete_graph_lex(int n);

// uniform random rank permutation over the same edge set
OrderedGraph random_ordering(const OrderedGraph& g, std::uint64_t seed);

// Erdős–Rényi sample with a uniform random ordering of whatever edges appear
OrderedGraph gnp(int n, double p, std::uint64_t seed);

struct AppendixAParams {
    int n = 0;
    double epsilon = 0.5;
    std::uint64_t seed = 0;
    bool pad_isolated = false; // append inert vertices up to 2n total
};

struct AppendixAGraph {
    OrderedGraph graph;
    int n = 0;
    double epsilon = 0.0;
    int ell = 0;            // number of B layers
    int base_width = 0;     // floor(n^epsilon)
    std::vector<int> layer_begin; // layer i in [layer_begin[i], layer_begin[i+1]); vertices 0..n-1 are A
    bool probability_clamped = false;
};

// Layered bipartite random graph: part A of size n, layers B_i of size
// 2^i * floor(n^eps), each A-B_i edge present independently with
// probability 4/(2^i * ell), clamped to 1 when the parameters are tiny.
AppendixAGraph appendix_a_graph(const AppendixAParams& params);

struct AppendixAReport {
    long long edge_count = 0;
    double edge_threshold = 0.0; // 2 n^{1+eps}
    bool edge_count_ok = false;
    int samples = 0;
    int samples_passed = 0;
};

// Sampled evidence for the construction's density bound: random A' and
// B' = union of layers above r = ceil(log2(m / (4 K^2 n^eps))) with
// e(A',B') <= 32 K^2 n^eps m / ell, for sampled |A'| = |B'| = m >= n^{eps/2}.
AppendixAReport appendix_a_checks(const AppendixAGraph& g, int samples, std::uint64_t seed,
                                  double k_ratio = 2.0);

void write_layer_metadata(std::ostream& out, const AppendixAGraph& g);

} // namespace eog
