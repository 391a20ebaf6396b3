#ifndef EOG_REGULARISE_HPP
#define EOG_REGULARISE_HPP

#include <iosfwd>
#include <vector>

#include "eog/graph.hpp"
#include "eog/rational.hpp"

namespace eog {

struct BipartitionView {
    GraphView view;          // cross edges only, full vertex set of the input
    std::vector<char> side;  // 0/1 per base vertex (meaningless for removed ones)
};

// Local switching: move any vertex with more same-side than cross-side
// neighbours until none exists. The cut never loses edges, so the result
// keeps at least half of the input's edges.
BipartitionView bipartite_half(const GraphView& g);

// Iteratively delete vertices of degree < threshold. Nonempty with min
// degree >= threshold whenever threshold <= avg/2; may be empty beyond that.
GraphView min_degree_core(const GraphView& g, const Rational& threshold);

// Nested sets A_1 >= ... >= A_delta, B_1 >= ... >= B_delta with
// |A_i| = |B_i| and pairwise edge-disjoint perfect matchings M_i of
// G_i[A_i u B_i], where G_i drops M_1..M_{i-1}.
struct MatchingChain {
    std::vector<std::vector<VertexId>> a_sets; // a_sets[i] = A_{i+1}, sorted
    std::vector<std::vector<VertexId>> b_sets;
    std::vector<std::vector<EdgeId>> matchings;

    int length() const { return static_cast<int>(matchings.size()); }
};

MatchingChain pyber_chain(const GraphView& g, const std::vector<VertexId>& a_side,
                          const std::vector<VertexId>& b_side, int delta);

struct RegularisationResult {
    GraphView subgraph;      // H: all degrees in [d', 6d']
    Rational d_prime;
    bool degenerate = false; // d' < 1/3, the band admits single edges

    // witness chain
    BipartitionView bipartite;
    GraphView core;
    MatchingChain chain;
    int q = 0;
    int x = 0;
};

// Extract an almost-regular subgraph: bipartite half -> min-degree core at
// d/4 -> matching chain with delta = floor(d/4) -> pick q with
// |B_q| <= 2|B_{q+x}| -> union of M_q..M_{q+x} on A_q u B_{q+x} -> core at
// (x+1)/6. Degrees of the result lie in [d', 6d'] with
// d' = (floor((d/4-1)/ceil(log n)) + 1)/6.
RegularisationResult regularise(const GraphView& g);

// JSON audit dump of the witness chain (sets and matchings as sorted lists)
void dump_witness(std::ostream& out, const RegularisationResult& r);

} // namespace eog

#endif
