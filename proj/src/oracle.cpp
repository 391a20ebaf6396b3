#include "eog/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "eog/height_table.hpp"

namespace eog {

namespace {

struct Dfs {
    const GraphView& g;
    const std::vector<char>& edge_ok; // indexed by EdgeId
    std::uint64_t explored = 0;
    std::unordered_map<std::uint64_t, int> memo;

    static std::uint64_t key(VertexId v, int min_rank, std::uint32_t mask) {
        return (static_cast<std::uint64_t>(mask) << 24) |
               (static_cast<std::uint64_t>(min_rank & 0xffff) << 8) |
               static_cast<std::uint64_t>(v & 0xff);
    }

    // longest extension from v using edges of rank >= min_rank, avoiding mask
    int best(VertexId v, int min_rank, std::uint32_t mask) {
        const std::uint64_t k = key(v, min_rank, mask);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        ++explored;
        int res = 0;
        auto inc = g.base().incident(v); // rank-descending
        for (EdgeId f : inc) {
            if (g.base().rank(f) < min_rank) break;
            if (!g.edge_alive(f) || !edge_ok[static_cast<size_t>(f)]) continue;
            VertexId u = g.base().edge(f).other(v);
            if (mask & (1u << u)) continue;
            res = std::max(res, 1 + best(u, g.base().rank(f) + 1, mask | (1u << u)));
        }
        memo.emplace(k, res);
        return res;
    }

    // rebuild one witness by following the memoised values
    void rebuild(VertexId v, int min_rank, std::uint32_t mask, std::vector<VertexId>& out) {
        const int want = best(v, min_rank, mask);
        if (want == 0) return;
        for (EdgeId f : g.base().incident(v)) {
            if (g.base().rank(f) < min_rank) break;
            if (!g.edge_alive(f) || !edge_ok[static_cast<size_t>(f)]) continue;
            VertexId u = g.base().edge(f).other(v);
            if (mask & (1u << u)) continue;
            if (1 + best(u, g.base().rank(f) + 1, mask | (1u << u)) == want) {
                out.push_back(u);
                rebuild(u, g.base().rank(f) + 1, mask | (1u << u), out);
                return;
            }
        }
    }
};

void check_guard(const GraphView& g, int vertex_guard) {
    if (g.base().num_vertices() > std::min(vertex_guard, 24))
        throw std::invalid_argument("oracle: vertex guard exceeded, refusing exhaustive search");
}

OracleResult longest_increasing(const GraphView& g, const std::vector<char>& edge_ok) {
    Dfs dfs{g, edge_ok};
    OracleResult r;
    for (VertexId v : g.vertices()) {
        int len = dfs.best(v, 1, 1u << v);
        if (len > r.optimum) {
            r.optimum = len;
            r.witness.verts = {v};
            dfs.rebuild(v, 1, 1u << v, r.witness.verts);
        }
    }
    if (r.optimum == 0) r.witness.verts.clear();
    r.explored = dfs.explored;
    return r;
}

} // namespace

OracleResult longest_monotone_path(const GraphView& g, int vertex_guard) {
    check_guard(g, vertex_guard);
    std::vector<char> all(static_cast<size_t>(g.base().num_edges()), 1);
    OracleResult inc = longest_increasing(g, all);

    // same search under globally reversed ranks; equal by symmetry, kept as a
    // cross-check that also canonicalises which witness direction we report
    const int m = g.base().num_edges();
    std::vector<int> rev(static_cast<size_t>(m));
    for (int r = 1; r <= m; ++r) rev[static_cast<size_t>(r - 1)] = m + 1 - r;
    OrderedGraph flipped = g.base().with_ranks(rev);
    GraphView fv(flipped);
    for (EdgeId e = 0; e < m; ++e)
        if (!g.edge_alive(e)) fv = fv.without_edges({e});
    for (VertexId v = 0; v < g.base().num_vertices(); ++v)
        if (!g.vertex_alive(v) && fv.vertex_alive(v)) fv = fv.without_vertices({v});
    OracleResult dec = longest_increasing(fv, all);

    OracleResult best;
    if (inc.optimum >= dec.optimum) {
        best = inc;
    } else {
        best = dec; // decreasing in the original ranks; canonicalise by reversal
        std::reverse(best.witness.verts.begin(), best.witness.verts.end());
    }
    best.explored = inc.explored + dec.explored;
    return best;
}

OracleResult longest_increasing_from(const GraphView& g, EdgeId e,
                                     std::optional<int> height_floor, int vertex_guard) {
    check_guard(g, vertex_guard);
    if (!g.edge_alive(e)) throw std::invalid_argument("oracle: start edge not in view");

    std::vector<char> ok(static_cast<size_t>(g.base().num_edges()), 1);
    if (height_floor) {
        HeightTable t(g);
        for (EdgeId f : g.edges())
            ok[static_cast<size_t>(f)] = t.height(f) >= *height_floor ? 1 : 0;
        if (!ok[static_cast<size_t>(e)]) {
            OracleResult r;
            r.empty_feasible_set = true;
            return r;
        }
    }

    Dfs dfs{g, ok};
    const Edge& ed = g.base().edge(e);
    OracleResult r;
    for (VertexId start : {ed.u, ed.v}) {
        VertexId nx = ed.other(start);
        std::uint32_t mask = (1u << start) | (1u << nx);
        int len = 1 + dfs.best(nx, ed.rank + 1, mask);
        if (len > r.optimum) {
            r.optimum = len;
            r.witness.verts = {start, nx};
            dfs.rebuild(nx, ed.rank + 1, mask, r.witness.verts);
        }
    }
    r.explored = dfs.explored;
    return r;
}

int altitude(const OrderedGraph& shape, int edge_guard) {
    const int m = shape.num_edges();
    if (m > std::min(edge_guard, 10))
        throw std::invalid_argument("altitude: edge guard exceeded (|E|! orderings is too many)");
    if (m == 0) return 0;

    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    int best = m; // any ordering's longest path is at most m
    do {
        OrderedGraph h = shape.with_ranks(perm);
        GraphView v(h);
        best = std::min(best, longest_monotone_path(v, h.num_vertices()).optimum);
        if (best <= 1) break; // cannot go lower while an edge exists
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace eog
