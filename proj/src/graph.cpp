#include "eog/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eog {

namespace {

std::int64_t pair_key(int n, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::int64_t>(u) * n + v;
}

} // namespace

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    const int m = static_cast<int>(edges_.size());
    inc_.resize(static_cast<size_t>(n_));
    by_rank_.assign(static_cast<size_t>(m), kNoEdge);
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (ed.u == ed.v) throw std::invalid_argument("self-loop");
        if (ed.rank < 1 || ed.rank > m)
            throw std::invalid_argument("rank out of range [1,m]");
        if (by_rank_[static_cast<size_t>(ed.rank - 1)] != kNoEdge)
            throw std::invalid_argument("rank collision");
        by_rank_[static_cast<size_t>(ed.rank - 1)] = e;
        auto key = pair_key(n_, ed.u, ed.v);
        if (!lookup_.emplace(key, e).second)
            throw std::invalid_argument("duplicate edge");
        inc_[static_cast<size_t>(ed.u)].push_back(e);
        inc_[static_cast<size_t>(ed.v)].push_back(e);
    }
    for (auto& lst : inc_)
        std::sort(lst.begin(), lst.end(),
                  [&](EdgeId a, EdgeId b) { return edges_[static_cast<size_t>(a)].rank > edges_[static_cast<size_t>(b)].rank; });
}

EdgeId OrderedGraph::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return kNoEdge;
    auto it = lookup_.find(pair_key(n_, u, v));
    return it == lookup_.end() ? kNoEdge : it->second;
}

OrderedGraph OrderedGraph::with_ranks(const std::vector<int>& new_rank_of_old) const {
    std::vector<Edge> es = edges_;
    for (auto& e : es) e.rank = new_rank_of_old[static_cast<size_t>(e.rank - 1)];
    return OrderedGraph(n_, std::move(es));
}

GraphView::GraphView(const OrderedGraph& base)
    : base_(&base),
      removed_v_(static_cast<size_t>(base.num_vertices()), 0),
      removed_e_(static_cast<size_t>(base.num_edges()), 0),
      n_alive_(base.num_vertices()),
      m_alive_(base.num_edges()) {}

std::vector<VertexId> GraphView::vertices() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<size_t>(n_alive_));
    for (VertexId v = 0; v < base_->num_vertices(); ++v)
        if (!removed_v_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<EdgeId> GraphView::edges() const {
    std::vector<EdgeId> out;
    out.reserve(static_cast<size_t>(m_alive_));
    for (EdgeId e = 0; e < base_->num_edges(); ++e)
        if (!removed_e_[static_cast<size_t>(e)]) out.push_back(e);
    return out;
}

int GraphView::degree(VertexId v) const {
    if (removed_v_[static_cast<size_t>(v)]) return 0;
    int d = 0;
    for (EdgeId e : base_->incident(v))
        if (!removed_e_[static_cast<size_t>(e)]) ++d;
    return d;
}

int GraphView::max_degree() const {
    int best = 0;
    for (VertexId v = 0; v < base_->num_vertices(); ++v)
        if (!removed_v_[static_cast<size_t>(v)]) best = std::max(best, degree(v));
    return best;
}

GraphView GraphView::without_vertices(const std::vector<VertexId>& vs) const {
    GraphView out = *this;
    for (VertexId v : vs) {
        if (v < 0 || v >= base_->num_vertices() || out.removed_v_[static_cast<size_t>(v)])
            throw std::invalid_argument("without_vertices: target not in view");
        out.removed_v_[static_cast<size_t>(v)] = 1;
        --out.n_alive_;
        for (EdgeId e : base_->incident(v)) {
            if (!out.removed_e_[static_cast<size_t>(e)]) {
                out.removed_e_[static_cast<size_t>(e)] = 1;
                --out.m_alive_;
            }
        }
    }
    return out;
}

GraphView GraphView::without_edges(const std::vector<EdgeId>& es) const {
    GraphView out = *this;
    for (EdgeId e : es) {
        if (e < 0 || e >= base_->num_edges() || out.removed_e_[static_cast<size_t>(e)])
            throw std::invalid_argument("without_edges: target not in view");
        out.removed_e_[static_cast<size_t>(e)] = 1;
        --out.m_alive_;
    }
    return out;
}

GraphView GraphView::restricted_to(const std::vector<VertexId>& vs,
                                   const std::vector<EdgeId>& es) const {
    GraphView out(*base_);
    std::vector<char> keep_v(static_cast<size_t>(base_->num_vertices()), 0);
    std::vector<char> keep_e(static_cast<size_t>(base_->num_edges()), 0);
    for (VertexId v : vs) {
        if (removed_v_[static_cast<size_t>(v)])
            throw std::invalid_argument("restricted_to: vertex not in view");
        keep_v[static_cast<size_t>(v)] = 1;
    }
    for (EdgeId e : es) {
        if (removed_e_[static_cast<size_t>(e)])
            throw std::invalid_argument("restricted_to: edge not in view");
        const Edge& ed = base_->edge(e);
        if (!keep_v[static_cast<size_t>(ed.u)] || !keep_v[static_cast<size_t>(ed.v)])
            throw std::invalid_argument("restricted_to: edge endpoint not kept");
        keep_e[static_cast<size_t>(e)] = 1;
    }
    out.n_alive_ = 0;
    out.m_alive_ = 0;
    for (VertexId v = 0; v < base_->num_vertices(); ++v) {
        out.removed_v_[static_cast<size_t>(v)] = !keep_v[static_cast<size_t>(v)];
        if (keep_v[static_cast<size_t>(v)]) ++out.n_alive_;
    }
    for (EdgeId e = 0; e < base_->num_edges(); ++e) {
        out.removed_e_[static_cast<size_t>(e)] = !keep_e[static_cast<size_t>(e)];
        if (keep_e[static_cast<size_t>(e)]) ++out.m_alive_;
    }
    return out;
}

OrderedGraph read_graph(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& msg) {
        std::ostringstream os;
        os << name << ":" << lineno << ": " << msg;
        throw std::runtime_error(os.str());
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "eog")
                fail("bad problem line (expected 'p eog <n> <m>')");
            if (n < 0 || m < 0) fail("negative n or m");
            edges.reserve(static_cast<size_t>(m));
        } else if (tok == "e") {
            if (n < 0) fail("edge line before problem line");
            Edge e{};
            if (!(ls >> e.u >> e.v >> e.rank)) fail("bad edge line (expected 'e <u> <v> <rank>')");
            edges.push_back(e);
        } else {
            fail("unknown line type '" + tok + "'");
        }
    }
    if (n < 0) throw std::runtime_error(name + ": missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw std::runtime_error(name + ": edge count mismatch with header");
    try {
        return OrderedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(name + ": " + ex.what());
    }
}

OrderedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in, path);
}

void write_graph(std::ostream& out, const OrderedGraph& g) {
    out << "p eog " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out << "e " << ed.u << ' ' << ed.v << ' ' << ed.rank << '\n';
    }
}

} // namespace eog
