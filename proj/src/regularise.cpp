#include "eog/regularise.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace eog {

namespace {

// Kuhn augmenting-path maximum matching on (A, neighbours-of-A).
// Returns match_of_a (index into a_verts -> matched b vertex or -1).
struct Matching {
    std::vector<VertexId> match_of_a; // per a index
    std::map<VertexId, int> match_of_b; // b vertex -> a index
};

bool try_augment(int ai, const std::vector<std::vector<VertexId>>& adj, Matching& m,
                 std::set<VertexId>& visited_b) {
    for (VertexId b : adj[static_cast<size_t>(ai)]) {
        if (visited_b.count(b)) continue;
        visited_b.insert(b);
        auto it = m.match_of_b.find(b);
        if (it == m.match_of_b.end() || try_augment(it->second, adj, m, visited_b)) {
            m.match_of_a[static_cast<size_t>(ai)] = b;
            m.match_of_b[b] = ai;
            return true;
        }
    }
    return false;
}

Matching max_matching(const std::vector<std::vector<VertexId>>& adj) {
    Matching m;
    m.match_of_a.assign(adj.size(), -1);
    for (int ai = 0; ai < static_cast<int>(adj.size()); ++ai) {
        std::set<VertexId> visited_b;
        try_augment(ai, adj, m, visited_b);
    }
    return m;
}

} // namespace

BipartitionView bipartite_half(const GraphView& g) {
    const OrderedGraph& base = g.base();
    std::vector<char> side(static_cast<size_t>(base.num_vertices()), 0);
    for (VertexId v = 0; v < base.num_vertices(); ++v) side[static_cast<size_t>(v)] = static_cast<char>(v & 1);

    bool moved = true;
    while (moved) {
        moved = false;
        for (VertexId v = 0; v < base.num_vertices(); ++v) {
            if (!g.vertex_alive(v)) continue;
            int same = 0, cross = 0;
            for (EdgeId e : base.incident(v)) {
                if (!g.edge_alive(e)) continue;
                VertexId w = base.edge(e).other(v);
                (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)] ? same : cross)++;
            }
            if (same > cross) {
                side[static_cast<size_t>(v)] ^= 1;
                moved = true;
            }
        }
    }

    std::vector<EdgeId> same_side;
    for (EdgeId e : g.edges()) {
        const Edge& ed = base.edge(e);
        if (side[static_cast<size_t>(ed.u)] == side[static_cast<size_t>(ed.v)]) same_side.push_back(e);
    }
    return {g.without_edges(same_side), std::move(side)};
}

GraphView min_degree_core(const GraphView& g, const Rational& threshold) {
    GraphView cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexId> doomed;
        for (VertexId v : cur.vertices())
            if (Rational(cur.degree(v)) < threshold) doomed.push_back(v);
        if (!doomed.empty()) {
            cur = cur.without_vertices(doomed);
            changed = true;
        }
    }
    return cur;
}

MatchingChain pyber_chain(const GraphView& g, const std::vector<VertexId>& a_side,
                          const std::vector<VertexId>& b_side, int delta) {
    const OrderedGraph& base = g.base();
    if (a_side.size() < b_side.size())
        throw std::invalid_argument("pyber_chain: need |A| >= |B|");
    std::vector<int> side_of(static_cast<size_t>(base.num_vertices()), -1);
    for (VertexId v : a_side) side_of[static_cast<size_t>(v)] = 0;
    for (VertexId v : b_side) side_of[static_cast<size_t>(v)] = 1;
    for (EdgeId e : g.edges()) {
        const Edge& ed = base.edge(e);
        if (side_of[static_cast<size_t>(ed.u)] == -1 || side_of[static_cast<size_t>(ed.v)] == -1 ||
            side_of[static_cast<size_t>(ed.u)] == side_of[static_cast<size_t>(ed.v)])
            throw std::invalid_argument("pyber_chain: graph not bipartite on the given sides");
    }
    for (VertexId v : g.vertices())
        if (g.degree(v) < delta)
            throw std::invalid_argument("pyber_chain: min degree below delta");

    MatchingChain chain;
    if (delta <= 0) return chain;

    std::vector<char> edge_used(static_cast<size_t>(base.num_edges()), 0);
    std::vector<VertexId> a_cur = a_side;
    std::sort(a_cur.begin(), a_cur.end());

    // neighbourhood in G_i restricted to the current candidate set
    auto neighbourhood = [&](const std::vector<VertexId>& xs) {
        std::set<VertexId> nb;
        for (VertexId a : xs)
            for (EdgeId e : base.incident(a))
                if (g.edge_alive(e) && !edge_used[static_cast<size_t>(e)])
                    nb.insert(base.edge(e).other(a));
        return nb;
    };

    for (int i = 1; i <= delta; ++i) {
        std::vector<VertexId> x = a_cur;
        if (neighbourhood(x).size() > x.size())
            throw std::logic_error("pyber_chain: |N(A_{i-1})| > |A_{i-1}| (invariant broken)");

        Matching match;
        std::vector<std::vector<VertexId>> adj;
        for (;;) {
            // greedy single deletions while the defining property survives
            bool deleted = true;
            while (deleted && x.size() > 1) {
                deleted = false;
                for (size_t k = 0; k < x.size(); ++k) {
                    std::vector<VertexId> trial = x;
                    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
                    if (neighbourhood(trial).size() <= trial.size()) {
                        x = std::move(trial);
                        deleted = true;
                        break;
                    }
                }
            }
            adj.assign(x.size(), {});
            for (size_t k = 0; k < x.size(); ++k)
                for (EdgeId e : base.incident(x[k]))
                    if (g.edge_alive(e) && !edge_used[static_cast<size_t>(e)])
                        adj[k].push_back(base.edge(e).other(x[k]));
            match = max_matching(adj);
            int unmatched = -1;
            for (size_t k = 0; k < x.size(); ++k)
                if (match.match_of_a[k] == -1) { unmatched = static_cast<int>(k); break; }
            if (unmatched == -1) break;
            // Hall violator: A-vertices alternating-reachable from the
            // unmatched one; strictly smaller and keeps |N| <= size.
            std::set<int> reach_a{unmatched};
            std::set<VertexId> reach_b;
            std::vector<int> stack{unmatched};
            while (!stack.empty()) {
                int ai = stack.back();
                stack.pop_back();
                for (VertexId b : adj[static_cast<size_t>(ai)]) {
                    if (reach_b.count(b)) continue;
                    reach_b.insert(b);
                    auto it = match.match_of_b.find(b);
                    if (it != match.match_of_b.end() && reach_a.insert(it->second).second)
                        stack.push_back(it->second);
                }
            }
            std::vector<VertexId> smaller;
            for (int ai : reach_a) smaller.push_back(x[static_cast<size_t>(ai)]);
            std::sort(smaller.begin(), smaller.end());
            x = std::move(smaller);
        }

        std::set<VertexId> nb = neighbourhood(x);
        if (nb.size() != x.size())
            throw std::logic_error("pyber_chain: |B_i| != |A_i| at fixpoint");

        std::vector<EdgeId> m_i;
        for (size_t k = 0; k < x.size(); ++k) {
            EdgeId e = base.find_edge(x[k], match.match_of_a[k]);
            edge_used[static_cast<size_t>(e)] = 1;
            m_i.push_back(e);
        }
        std::sort(m_i.begin(), m_i.end());
        chain.a_sets.push_back(x);
        chain.b_sets.emplace_back(nb.begin(), nb.end());
        chain.matchings.push_back(std::move(m_i));
        a_cur = x;
    }
    return chain;
}

RegularisationResult regularise(const GraphView& g) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("regularise: need at least 2 vertices");
    const Rational d = g.average_degree();
    const int log_n = ceil_log2(n);

    RegularisationResult res{g.restricted_to({}, {}), Rational(0), true, BipartitionView{g, {}}, g, {}, 0, 0};

    const Rational t = d / Rational(4) - Rational(1);
    if (t < Rational(0)) {
        // d' <= 0: the degree band is empty or [0,0]; the empty subgraph
        // satisfies it vacuously
        res.d_prime = Rational((t / Rational(log_n == 0 ? 1 : log_n)).floor() + 1, 6);
        return res;
    }
    const int x = static_cast<int>((t / Rational(std::max(log_n, 1))).floor());
    const Rational d_prime(static_cast<std::int64_t>(x) + 1, 6);

    BipartitionView bip = bipartite_half(g);
    GraphView core = min_degree_core(bip.view, d / Rational(4));
    if (core.num_vertices() == 0)
        throw std::logic_error("regularise: empty core at threshold d/4");

    std::vector<VertexId> side_a, side_b;
    for (VertexId v : core.vertices())
        (bip.side[static_cast<size_t>(v)] ? side_b : side_a).push_back(v);
    if (side_a.size() < side_b.size()) std::swap(side_a, side_b);

    const int delta = static_cast<int>((d / Rational(4)).floor());
    MatchingChain chain = pyber_chain(core, side_a, side_b, delta);

    int q = 0;
    for (int cand = 1; cand + x <= delta; ++cand) {
        if (chain.b_sets[static_cast<size_t>(cand - 1)].size() <=
            2 * chain.b_sets[static_cast<size_t>(cand + x - 1)].size()) {
            q = cand;
            break;
        }
    }
    if (q == 0) throw std::logic_error("regularise: no index q with |B_q| <= 2|B_{q+x}|");

    std::set<VertexId> keep(chain.a_sets[static_cast<size_t>(q - 1)].begin(),
                            chain.a_sets[static_cast<size_t>(q - 1)].end());
    keep.insert(chain.b_sets[static_cast<size_t>(q + x - 1)].begin(),
                chain.b_sets[static_cast<size_t>(q + x - 1)].end());
    std::vector<EdgeId> h_edges;
    for (int i = q; i <= q + x; ++i)
        for (EdgeId e : chain.matchings[static_cast<size_t>(i - 1)]) {
            const Edge& ed = g.base().edge(e);
            if (keep.count(ed.u) && keep.count(ed.v)) h_edges.push_back(e);
        }
    GraphView h0 = core.restricted_to({keep.begin(), keep.end()}, h_edges);
    GraphView h = min_degree_core(h0, d_prime);

    const Rational six_d_prime = d_prime * Rational(6);
    for (VertexId v : h.vertices()) {
        Rational deg(h.degree(v));
        if (deg < d_prime || deg > six_d_prime)
            throw std::logic_error("regularise: output degree outside [d', 6d']");
    }

    res.subgraph = h;
    res.d_prime = d_prime;
    res.degenerate = d_prime < Rational(1, 3);
    res.bipartite = std::move(bip);
    res.core = std::move(core);
    res.chain = std::move(chain);
    res.q = q;
    res.x = x;
    return res;
}

void dump_witness(std::ostream& out, const RegularisationResult& r) {
    nlohmann::json j;
    j["d_prime"] = {{"num", r.d_prime.num()}, {"den", r.d_prime.den()}};
    j["degenerate"] = r.degenerate;
    j["q"] = r.q;
    j["x"] = r.x;
    j["subgraph_vertices"] = r.subgraph.vertices();
    j["subgraph_edges"] = r.subgraph.edges();
    j["core_vertices"] = r.core.vertices();
    j["a_sets"] = r.chain.a_sets;
    j["b_sets"] = r.chain.b_sets;
    j["matchings"] = r.chain.matchings;
    out << j.dump(2) << '\n';
}

} // namespace eog
