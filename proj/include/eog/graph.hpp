#ifndef EOG_GRAPH_HPP
#define EOG_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "eog/rational.hpp"

namespace eog {

using VertexId = int;
using EdgeId = int;

constexpr EdgeId kNoEdge = -1;

struct Edge {
    VertexId u;
    VertexId v;
    int rank; // 1..m, bijective

    bool has(VertexId x) const { return u == x || v == x; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

// Simple undirected graph with a total edge order (explicit ranks 1..m)
// and a total vertex order (numeric id order). Immutable once built.
class OrderedGraph {
public:
    OrderedGraph() : n_(0) {}
    OrderedGraph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    int rank(EdgeId e) const { return edges_[static_cast<size_t>(e)].rank; }

    // kNoEdge if absent
    EdgeId find_edge(VertexId u, VertexId v) const;
    EdgeId edge_by_rank(int rank) const { return by_rank_[static_cast<size_t>(rank - 1)]; }

    // incident edges, sorted by rank descending
    std::span<const EdgeId> incident(VertexId v) const {
        return {inc_[static_cast<size_t>(v)].data(), inc_[static_cast<size_t>(v)].size()};
    }
    int degree(VertexId v) const { return static_cast<int>(inc_[static_cast<size_t>(v)].size()); }

    Rational average_degree() const { return Rational(2 * static_cast<std::int64_t>(num_edges()), n_); }

    // graph with the same edge set but ranks remapped by new_rank_of_old[r-1]
    OrderedGraph with_ranks(const std::vector<int>& new_rank_of_old) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> inc_;
    std::vector<EdgeId> by_rank_;
    std::unordered_map<std::int64_t, EdgeId> lookup_;
};

// Deletion view over a base graph. Never renumbers: ranks and ids stay in
// base coordinates, so heights of G and G\T are directly comparable.
class GraphView {
public:
    explicit GraphView(const OrderedGraph& base);

    const OrderedGraph& base() const { return *base_; }

    bool vertex_alive(VertexId v) const { return !removed_v_[static_cast<size_t>(v)]; }
    bool edge_alive(EdgeId e) const { return !removed_e_[static_cast<size_t>(e)]; }

    int num_vertices() const { return n_alive_; }
    int num_edges() const { return m_alive_; }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;

    int degree(VertexId v) const;
    int max_degree() const;

    // 0 for the empty vertex set
    Rational average_degree() const {
        if (n_alive_ == 0) return Rational(0);
        return Rational(2 * static_cast<std::int64_t>(m_alive_), n_alive_);
    }

    // Throw if a target is already removed (caller bookkeeping bug).
    GraphView without_vertices(const std::vector<VertexId>& vs) const;
    GraphView without_edges(const std::vector<EdgeId>& es) const;

    // Keep exactly the given vertices/edges (edges must have both ends kept).
    GraphView restricted_to(const std::vector<VertexId>& vs, const std::vector<EdgeId>& es) const;

private:
    const OrderedGraph* base_;
    std::vector<char> removed_v_;
    std::vector<char> removed_e_;
    int n_alive_;
    int m_alive_;
};

// Line-oriented text format:
//   c <comment>
//   p eog <n> <m>
//   e <u> <v> <rank>
OrderedGraph load_graph(const std::string& path);
OrderedGraph read_graph(std::istream& in, const std::string& name = "<stream>");
void write_graph(std::ostream& out, const OrderedGraph& g);

} // namespace eog

#endif
