#include "eog/height_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eog {

HeightTable::HeightTable(const GraphView& g) {
    base_ = &g.base();
    const int n = base_->num_vertices();
    columns_.resize(static_cast<size_t>(n));
    cell_of_.assign(static_cast<size_t>(base_->num_edges()), Cell{0, -1});

    // Per-vertex cursor into the rank-descending incident list. One sweep per
    // row over alive vertices in order; each vertex takes its largest
    // unplaced alive edge or stays blank for that row. All edges are placed
    // by row maxdeg+1 at the latest.
    std::vector<size_t> cursor(static_cast<size_t>(n), 0);
    std::vector<char> placed(static_cast<size_t>(base_->num_edges()), 0);
    int remaining = g.num_edges();
    for (int row = 1; remaining > 0; ++row) {
        for (VertexId v = 0; v < n; ++v) {
            if (!g.vertex_alive(v)) continue;
            auto inc = base_->incident(v);
            size_t& cur = cursor[static_cast<size_t>(v)];
            while (cur < inc.size() &&
                   (placed[static_cast<size_t>(inc[cur])] || !g.edge_alive(inc[cur])))
                ++cur;
            if (cur == inc.size()) continue;
            EdgeId e = inc[cur];
            placed[static_cast<size_t>(e)] = 1;
            columns_[static_cast<size_t>(v)].push_back(e);
            cell_of_[static_cast<size_t>(e)] = Cell{row, v};
            ++placed_;
            --remaining;
        }
    }
}

HeightTable HeightTable::from_columns(const OrderedGraph& base,
                                      std::vector<std::vector<EdgeId>> columns) {
    HeightTable t;
    t.base_ = &base;
    t.columns_ = std::move(columns);
    t.cell_of_.assign(static_cast<size_t>(base.num_edges()), Cell{0, -1});
    for (VertexId v = 0; v < static_cast<VertexId>(t.columns_.size()); ++v)
        for (size_t i = 0; i < t.columns_[static_cast<size_t>(v)].size(); ++i) {
            EdgeId e = t.columns_[static_cast<size_t>(v)][i];
            t.cell_of_[static_cast<size_t>(e)] = Cell{static_cast<int>(i) + 1, v};
            ++t.placed_;
        }
    return t;
}

int HeightTable::height(EdgeId e) const {
    if (!contains(e)) throw std::invalid_argument("height: edge not in table");
    return cell_of_[static_cast<size_t>(e)].row;
}

VertexId HeightTable::column(EdgeId e) const {
    if (!contains(e)) throw std::invalid_argument("column: edge not in table");
    return cell_of_[static_cast<size_t>(e)].col;
}

Cell HeightTable::cell(EdgeId e) const {
    if (!contains(e)) throw std::invalid_argument("cell: edge not in table");
    return cell_of_[static_cast<size_t>(e)];
}

int HeightTable::max_height() const {
    int best = 0;
    for (const auto& col : columns_) best = std::max(best, static_cast<int>(col.size()));
    return best;
}

EdgeId HeightTable::max_height_edge() const {
    Cell best{0, -1};
    EdgeId out = kNoEdge;
    for (VertexId v = 0; v < static_cast<VertexId>(columns_.size()); ++v) {
        const auto& col = columns_[static_cast<size_t>(v)];
        if (col.empty()) continue;
        Cell c{static_cast<int>(col.size()), v};
        if (out == kNoEdge || lex_less(best, c)) {
            best = c;
            out = col.back();
        }
    }
    return out;
}

std::vector<VertexId> HeightTable::s_set(VertexId x, VertexId y, int i) const {
    EdgeId xy = base_->find_edge(x, y);
    if (xy == kNoEdge || !contains(xy)) throw std::invalid_argument("s_set: edge xy absent");
    const int h = height(xy);
    if (i >= h) throw std::invalid_argument("s_set: S_i undefined (i >= h(xy))");
    if (i < 0) throw std::invalid_argument("s_set: negative i");
    std::vector<VertexId> out;
    out.reserve(static_cast<size_t>(i));
    for (int row = h - i; row < h; ++row) {
        EdgeId yz = at(row, y);
        if (yz == kNoEdge)
            throw std::logic_error("s_set: blank cell below a placed edge"); // contradicts prefix-fullness
        out.push_back(base_->edge(yz).other(y));
    }
    return out;
}

void HeightTable::dump(std::ostream& out) const {
    for (int row = 1; row <= max_height(); ++row)
        for (VertexId v = 0; v < static_cast<VertexId>(columns_.size()); ++v) {
            EdgeId e = at(row, v);
            if (e == kNoEdge) continue;
            const Edge& ed = base_->edge(e);
            out << '(' << row << ", " << v << ") " << ed.u << ' ' << ed.v << ' ' << ed.rank << '\n';
        }
}

CheckResult check_lex_implies_rank(const HeightTable& t, const GraphView& g) {
    const OrderedGraph& base = g.base();
    for (VertexId v = 0; v < base.num_vertices(); ++v) {
        if (!g.vertex_alive(v)) continue;
        // f ranges over column-v entries; e over all alive edges at v
        for (EdgeId f : base.incident(v)) {
            if (!g.edge_alive(f) || !t.contains(f) || t.column(f) != v) continue;
            Cell cf = t.cell(f);
            for (EdgeId e : base.incident(v)) {
                if (e == f || !g.edge_alive(e) || !t.contains(e)) continue;
                if (lex_less(cf, t.cell(e)) && base.rank(e) >= base.rank(f)) {
                    std::ostringstream os;
                    os << "edges rank " << base.rank(e) << " and rank " << base.rank(f)
                       << " at vertex " << v << " violate lex->rank";
                    return {false, os.str()};
                }
            }
        }
    }
    return {};
}

CheckResult check_subgraph_monotonicity(const GraphView& g, const GraphView& sub) {
    if (&g.base() != &sub.base())
        throw std::invalid_argument("check_subgraph_monotonicity: views over different bases");
    for (VertexId v = 0; v < g.base().num_vertices(); ++v)
        if (g.vertex_alive(v) != sub.vertex_alive(v))
            throw std::invalid_argument("check_subgraph_monotonicity: subgraph is not spanning");
    for (EdgeId e = 0; e < g.base().num_edges(); ++e)
        if (sub.edge_alive(e) && !g.edge_alive(e))
            throw std::invalid_argument("check_subgraph_monotonicity: not a subgraph");

    HeightTable tg(g), ts(sub);
    for (EdgeId e : sub.edges()) {
        if (!lex_leq(ts.cell(e), tg.cell(e))) {
            std::ostringstream os;
            os << "edge rank " << g.base().rank(e) << " rose from (" << tg.height(e) << ','
               << tg.column(e) << ") to (" << ts.height(e) << ',' << ts.column(e) << ')';
            return {false, os.str()};
        }
    }
    return {};
}

EdgeDropResult edge_drop_witness(const GraphView& g, const std::vector<EdgeId>& s_set,
                                 const std::vector<EdgeId>& t_set) {
    if (s_set.size() <= t_set.size())
        throw std::invalid_argument("edge_drop_witness: need |S| > |T|");
    for (EdgeId e : s_set)
        if (!g.edge_alive(e)) throw std::invalid_argument("edge_drop_witness: S edge not in view");
    for (EdgeId e : t_set)
        if (!g.edge_alive(e)) throw std::invalid_argument("edge_drop_witness: T edge not in view");

    HeightTable tg(g);
    GraphView gt = g.without_edges(t_set);
    HeightTable tt(gt);

    EdgeDropResult res;
    res.min_height_in_s = 0;
    for (EdgeId f : s_set) {
        int h = tg.height(f);
        if (res.min_height_in_s == 0 || h < res.min_height_in_s) res.min_height_in_s = h;
    }

    // auxiliary digraph: arcs ht_G(e) -> ht_{G\T}(e), loops removed
    std::map<std::pair<int, int>, int> outdeg, indeg;
    for (EdgeId e : gt.edges()) {
        Cell from = tg.cell(e), to = tt.cell(e);
        if (from == to) continue;
        ++res.digraph.arcs;
        if (!lex_less(to, from)) res.digraph.acyclic = false;
        if (++outdeg[{from.row, from.col}] > 1) res.digraph.degrees_ok = false;
        if (++indeg[{to.row, to.col}] > 1) res.digraph.degrees_ok = false;
    }

    std::set<EdgeId> in_t(t_set.begin(), t_set.end());
    Cell best{0, -1};
    for (EdgeId e : s_set) {
        if (in_t.count(e)) continue;
        int h = tt.height(e);
        if (h < res.min_height_in_s) continue;
        Cell c = tt.cell(e);
        if (res.witness == kNoEdge || lex_less(best, c)) {
            best = c;
            res.witness = e;
            res.witness_height = h;
        }
    }
    if (res.witness == kNoEdge)
        throw std::logic_error("edge_drop_witness: no witness found (lemma violated)");
    return res;
}

Length3Result length3_extension(const GraphView& g, VertexId x, VertexId y,
                                const std::vector<VertexId>& u_set, double m) {
    EdgeId xy = g.base().find_edge(x, y);
    if (xy == kNoEdge || !g.edge_alive(xy))
        throw std::invalid_argument("length3_extension: edge xy absent");
    std::vector<char> in_u(static_cast<size_t>(g.base().num_vertices()), 0);
    for (VertexId u : u_set) {
        if (!g.vertex_alive(u)) throw std::invalid_argument("length3_extension: U vertex not in view");
        if (u == x || u == y) throw std::invalid_argument("length3_extension: x or y lies in U");
        in_u[static_cast<size_t>(u)] = 1;
    }
    if (m < static_cast<double>(u_set.size()))
        throw std::invalid_argument("length3_extension: m < |U|");
    if (m * m / 2.0 <= static_cast<double>(g.max_degree()) * static_cast<double>(u_set.size()))
        throw std::invalid_argument("length3_extension: m^2/2 <= maxdeg*|U|");

    HeightTable t(g);
    const int h_xy = t.height(xy);
    if (static_cast<double>(h_xy) <= 4.0 * m + 3.0)
        throw std::invalid_argument("length3_extension: h(xy) <= 4m+3");

    const int i1 = static_cast<int>(std::ceil(2.0 * m));
    const int i2 = static_cast<int>(std::ceil(2.0 * m + 1.0));

    std::vector<VertexId> z_cand;
    for (VertexId z : t.s_set(x, y, i1))
        if (!in_u[static_cast<size_t>(z)]) z_cand.push_back(z);

    std::set<EdgeId> s_edges;
    std::map<EdgeId, std::pair<VertexId, VertexId>> orient;
    for (VertexId z : z_cand) {
        for (VertexId w : t.s_set(y, z, i2)) {
            if (in_u[static_cast<size_t>(w)] || w == x) continue;
            EdgeId zw = g.base().find_edge(z, w);
            s_edges.insert(zw);
            orient.emplace(zw, std::make_pair(z, w)); // first orientation found
        }
    }

    std::vector<EdgeId> t_edges;
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.base().edge(e);
        if (in_u[static_cast<size_t>(ed.u)] || in_u[static_cast<size_t>(ed.v)]) t_edges.push_back(e);
    }
    std::vector<EdgeId> s_vec(s_edges.begin(), s_edges.end());
    if (s_vec.size() <= t_edges.size())
        throw std::logic_error("length3_extension: |S| <= |T| despite preconditions");

    EdgeDropResult drop = edge_drop_witness(g, s_vec, t_edges);

    Length3Result res;
    auto it = orient.find(drop.witness);
    res.z = it->second.first;
    res.w = it->second.second;
    res.zw = drop.witness;
    res.connector = g.base().find_edge(y, res.z);
    res.new_edge_height = drop.witness_height;
    return res;
}

} // namespace eog
