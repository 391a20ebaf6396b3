#ifndef EOG_HEIGHT_TABLE_HPP
#define EOG_HEIGHT_TABLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "eog/graph.hpp"

namespace eog {

struct Cell {
    int row;      // height, 1-based
    VertexId col; // vertex column

    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
};

// (i,v) lex-precedes (i',v') iff i<i' or (i=i' and v<v')
inline bool lex_less(const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}
inline bool lex_leq(const Cell& a, const Cell& b) { return !lex_less(b, a); }

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// The height table of an ordered graph (or deletion view): cells are visited
// in lex order, each receiving the largest-rank unplaced edge incident to its
// column vertex. Columns are prefix-filled, so they are stored as plain
// sequences; blank cells are implicit.
class HeightTable {
public:
    explicit HeightTable(const GraphView& g);

    const OrderedGraph& base() const { return *base_; }

    bool contains(EdgeId e) const {
        return e >= 0 && e < static_cast<EdgeId>(cell_of_.size()) && cell_of_[static_cast<size_t>(e)].row > 0;
    }
    int height(EdgeId e) const;
    VertexId column(EdgeId e) const;
    Cell cell(EdgeId e) const;

    // kNoEdge for a blank cell
    EdgeId at(int row, VertexId col) const {
        const auto& c = columns_[static_cast<size_t>(col)];
        if (row < 1 || row > static_cast<int>(c.size())) return kNoEdge;
        return c[static_cast<size_t>(row - 1)];
    }
    int column_height(VertexId v) const { return static_cast<int>(columns_[static_cast<size_t>(v)].size()); }

    int num_placed() const { return placed_; }
    int max_height() const;
    EdgeId max_height_edge() const; // lex-largest cell's edge; kNoEdge if empty

    // S_i(x,y): the i vertices z with v(yz)=y and h(xy)-i <= h(yz) < h(xy).
    // Requires edge xy placed and i < h(xy).
    std::vector<VertexId> s_set(VertexId x, VertexId y, int i) const;

    // one line per nonempty cell: "(row, vertex) u v rank", rows then columns
    void dump(std::ostream& out) const;

    // test/diagnostic hook: adopt explicit column contents without running
    // the construction sweep
    static HeightTable from_columns(const OrderedGraph& base,
                                    std::vector<std::vector<EdgeId>> columns);

private:
    HeightTable() = default;

    const OrderedGraph* base_ = nullptr;
    std::vector<std::vector<EdgeId>> columns_; // columns_[v][row-1]
    std::vector<Cell> cell_of_;                // row 0 = not placed
    int placed_ = 0;
};

// Observation check: for all e,f sharing the vertex v(f) with
// ht(f) lex< ht(e), rank(e) < rank(f). Reports the first counterexample.
CheckResult check_lex_implies_rank(const HeightTable& t, const GraphView& g);

// Lemma check: ht_sub(e) lex<= ht_g(e) for every surviving edge. `sub` must be
// a spanning subgraph view of `g` (same alive vertices, subset of edges).
CheckResult check_subgraph_monotonicity(const GraphView& g, const GraphView& sub);

struct DigraphCheck {
    bool degrees_ok = true; // all in/out-degrees <= 1
    bool acyclic = true;    // every arc strictly lex-decreases
    int arcs = 0;
};

struct EdgeDropResult {
    EdgeId witness = kNoEdge;
    int min_height_in_s = 0;  // min_{f in S} h_G(f)
    int witness_height = 0;   // h_{G\T}(witness)
    DigraphCheck digraph;
};

// Lemma realisation: |S| > |T| guarantees an e in S\T with
// h_{G\T}(e) >= min_{f in S} h_G(f). Returns the lex-highest qualifying
// witness (largest ht_{G\T}) and the auxiliary-digraph diagnostics.
EdgeDropResult edge_drop_witness(const GraphView& g, const std::vector<EdgeId>& s_set,
                                 const std::vector<EdgeId>& t_set);

struct Length3Result {
    VertexId z = -1;
    VertexId w = -1;
    int new_edge_height = 0; // h_{G-U}(zw)
    EdgeId zw = kNoEdge;
    EdgeId connector = kNoEdge; // edge yz
};

// Given an oriented edge xy with h(xy) > 4m+3, m >= |U| and
// m^2/2 > maxdeg(G)*|U|, finds z,w outside U with xyzw increasing and
// h_{G-U}(zw) >= h(xy) - 4m - 3.
Length3Result length3_extension(const GraphView& g, VertexId x, VertexId y,
                                const std::vector<VertexId>& u_set, double m);

} // namespace eog

#endif
