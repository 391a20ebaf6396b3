#include "eog/pathfinder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eog/height_table.hpp"
#include "eog/regularise.hpp"

namespace eog {

namespace {

double log2n(int n) { return std::log2(static_cast<double>(std::max(n, 2))); }

} // namespace

DenseReachResult reachable_dense_subgraph(const GraphView& g, EdgeId e, double h, int n_upper) {
    if (h < 1.0) throw std::invalid_argument("reachable_dense_subgraph: h must be >= 1");
    if (!g.edge_alive(e)) throw std::invalid_argument("reachable_dense_subgraph: edge not in view");
    HeightTable t(g);
    const int n = n_upper > 0 ? n_upper : g.num_vertices();
    const double logn = log2n(n);
    if (static_cast<double>(t.height(e)) < 21.0 * h * logn)
        throw std::invalid_argument("reachable_dense_subgraph: h(e,G) < 21 h log n");

    const VertexId x0 = t.column(e);
    const VertexId x1 = g.base().edge(e).other(x0);
    const int step = static_cast<int>(std::floor(7.0 * h));

    // layer = N_i with one representative controlled trail per vertex
    std::map<VertexId, std::vector<VertexId>> layer;
    layer.emplace(x1, std::vector<VertexId>{x0, x1});

    const int cap = static_cast<int>(logn) + 4;
    for (int i = 1; i <= cap; ++i) {
        std::map<VertexId, std::vector<VertexId>> next;
        std::map<EdgeId, std::vector<VertexId>> h_edges;
        for (const auto& [xi, trail] : layer) {
            const VertexId xprev = trail[trail.size() - 2];
            EdgeId last = g.base().find_edge(xprev, xi);
            if (t.height(last) <= step) continue; // S_{floor(7h)} undefined here
            for (VertexId z : t.s_set(xprev, xi, step)) {
                EdgeId f = g.base().find_edge(xi, z);
                std::vector<VertexId> extended = trail;
                extended.push_back(z);
                h_edges.emplace(f, extended);
                next.emplace(z, std::move(extended));
            }
        }
        if (next.size() <= 2 * layer.size()) {
            std::set<VertexId> verts;
            std::vector<EdgeId> edges;
            for (const auto& [v, trail] : layer) verts.insert(v);
            for (const auto& [v, trail] : next) verts.insert(v);
            DenseReachResult res{g.restricted_to({}, {}), {}, i};
            for (const auto& [f, trail] : h_edges) {
                edges.push_back(f);
                res.trail_to.emplace(f, IncreasingTrail{trail});
            }
            res.subgraph = g.restricted_to({verts.begin(), verts.end()}, edges);
            return res;
        }
        layer = std::move(next);
    }
    throw std::logic_error("reachable_dense_subgraph: layer sizes kept doubling past log n");
}

IncreasingPath join_trail_path(const GraphView& g, const IncreasingTrail& w,
                               const IncreasingPath& p) {
    const std::size_t k = w.length();
    const std::size_t l = p.length();
    if (k < 1 || l < 1) throw std::invalid_argument("join_trail_path: degenerate input");
    const VertexId wa = w.verts[k - 1], wb = w.verts[k];
    if (wa == p.verts[1] && wb == p.verts[0]) {
        // reversed seam: shift the trail one step along p and recurse
        if (l == 1) return IncreasingPath{{w.verts[0], w.verts[1]}};
        if (k == 1) return p; // p already starts with (and reverses) the edge w0w1
        IncreasingTrail w2;
        w2.verts.assign(w.verts.begin(), w.verts.end() - 1);
        w2.verts.push_back(p.verts[2]);
        IncreasingPath p2;
        p2.verts.assign(p.verts.begin() + 1, p.verts.end());
        return join_trail_path(g, w2, p2);
    }
    if (!(wa == p.verts[0] && wb == p.verts[1]))
        throw std::invalid_argument("join_trail_path: trail does not end with the path's first edge");

    std::map<VertexId, std::size_t> first_occ;
    for (std::size_t i = 0; i < w.verts.size(); ++i) first_occ.emplace(w.verts[i], i);

    // partition p into segments, each starting at a trail vertex
    std::vector<std::vector<VertexId>> segments;
    for (VertexId v : p.verts) {
        if (first_occ.count(v))
            segments.push_back({v});
        else
            segments.back().push_back(v);
    }
    const auto& seg = *std::max_element(segments.begin(), segments.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const VertexId ws = seg.front();

    // walk backwards through first occurrences; each hop strictly lowers the
    // trail index, so the result is an increasing path inside E(w)
    std::vector<VertexId> stem;
    std::size_t idx = first_occ.at(ws);
    VertexId cur = ws;
    stem.push_back(cur);
    while (idx > 1) {
        cur = w.verts[idx - 1];
        stem.push_back(cur);
        idx = first_occ.at(cur);
    }
    std::reverse(stem.begin(), stem.end());
    // prepend the missing endpoint of the first trail edge
    if (stem.front() == w.verts[1])
        stem.insert(stem.begin(), w.verts[0]);
    else if (stem.front() == w.verts[0] && stem.size() > 1)
        stem.insert(stem.begin(), w.verts[1]);
    else if (stem.size() == 1) // ws is w0 itself
        stem = {w.verts[1], w.verts[0]};

    IncreasingPath out;
    out.verts = stem;
    out.verts.insert(out.verts.end(), seg.begin() + 1, seg.end());
    return out;
}

namespace {

IncreasingPath single_edge_path(const HeightTable& t, const GraphView& g, EdgeId e) {
    VertexId a = t.column(e);
    return IncreasingPath{{a, g.base().edge(e).other(a)}};
}

} // namespace

PathSearchReport find_increasing_path(const GraphView& g, EdgeId e, double a, int t,
                                      double c_constant, SearchMode mode) {
    if (t < 1) throw std::invalid_argument("find_increasing_path: t must be >= 1");
    if (!g.edge_alive(e)) throw std::invalid_argument("find_increasing_path: edge not in view");
    HeightTable table(g);
    const int h_e = table.height(e);
    if (static_cast<double>(h_e) <= a)
        throw std::invalid_argument("find_increasing_path: h(e,G) <= a");

    const int n = g.num_vertices();
    const double logn = log2n(n);
    const double cl = c_constant * logn;

    PathSearchReport r;
    r.mode = mode;
    r.start_edge = e;
    r.window = a;
    r.length_target = a > 0 ? std::pow(a, 1.0 - 1.0 / t) / std::pow(cl, 2.0 * t) : 0.0;

    bool gates_ok = true;
    auto finish = [&](IncreasingPath path) {
        r.path = std::move(path);
        r.window_satisfied = true;
        for (std::size_t i = 1; i < r.path.verts.size(); ++i) {
            EdgeId f = g.base().find_edge(r.path.verts[i - 1], r.path.verts[i]);
            if (static_cast<double>(table.height(f)) < static_cast<double>(h_e) - a)
                r.window_satisfied = false;
        }
        r.guarantee_satisfied =
            gates_ok && static_cast<double>(r.path.length()) >= r.length_target && r.window_satisfied;
        return r;
    };
    auto gate = [&](bool ok, const std::string& note) {
        if (!ok) {
            gates_ok = false;
            IterationLog lg;
            lg.gates_ok = false;
            lg.note = note;
            r.log.push_back(lg);
        }
        return ok;
    };

    // trivial regime: the promised length is at most one edge
    if (t == 1 || a <= 0 || r.length_target <= 1.0)
        return finish(single_edge_path(table, g, e));

    const double h_param = a / (21.0 * logn);
    if (!gate(h_param >= 1.0, "a/(21 log n) < 1")) return finish(single_edge_path(table, g, e));

    DenseReachResult dense = reachable_dense_subgraph(g, e, h_param);
    GraphView gp = dense.subgraph;
    // trim down to average degree floor(a/(21 log n))
    const Rational trim_target(static_cast<std::int64_t>(std::floor(h_param)));
    while (gp.num_edges() > 0 && gp.average_degree() > trim_target) {
        EdgeId lowest = kNoEdge;
        for (EdgeId f : gp.edges())
            if (lowest == kNoEdge || g.base().rank(f) < g.base().rank(lowest)) lowest = f;
        gp = gp.without_edges({lowest});
        dense.trail_to.erase(lowest);
    }
    if (gp.num_edges() == 0 || gp.num_vertices() < 2)
        return finish(single_edge_path(table, g, e));

    RegularisationResult reg = regularise(gp);
    GraphView h_sub = reg.subgraph;
    const double equ0_lhs = 4.0 * a / (cl * cl);
    gate(h_sub.average_degree().to_double() >= equ0_lhs, "avg(H) < 4a/(C log n)^2");
    gate(static_cast<double>(h_sub.max_degree()) < 30.0 * equ0_lhs, "maxdeg(H) >= 120a/(C log n)^2");
    if (h_sub.num_edges() == 0) return finish(single_edge_path(table, g, e));

    const double m = std::pow(240.0 * a, 1.0 - 1.0 / t) / std::pow(cl, 2.0 * (t - 1));
    const double ell = std::pow(m, 1.0 - 1.0 / (t - 1)) / std::pow(cl, 2.0 * (t - 1));
    const double h_avg = h_sub.average_degree().to_double();
    gate(m * m > 2.0 * h_sub.max_degree() * ell, "equ1: m^2 <= 2 maxdeg(H) ell");
    gate(h_avg / 4.0 >= a / (cl * cl) && a / (cl * cl) > 7.0 * m, "equ2: avg(H)/4 >= a/(C log n)^2 > 7m");
    gate(std::ceil(ell) < m, "equ3: ceil(ell) >= m");

    long long iters = static_cast<long long>(std::ceil(h_avg / (48.0 * m)));
    iters = std::max(1LL, std::min(iters, static_cast<long long>(h_sub.num_vertices())));

    HeightTable th(h_sub);
    EdgeId e1 = th.max_height_edge();
    if (e1 == kNoEdge) return finish(single_edge_path(table, g, e));

    std::vector<VertexId> acc;
    std::set<VertexId> used;
    GraphView gi = h_sub;
    EdgeId ei = e1;
    VertexId connector = -1; // x_i of the pending seam, valid from i >= 2

    for (long long i = 1; i <= iters; ++i) {
        HeightTable ti(gi);
        if (!gi.edge_alive(ei)) break;
        const int hi = ti.height(ei);
        double ai = std::min(m, static_cast<double>(hi) - 1.0);
        if (mode == SearchMode::kStrict)
            gate(static_cast<double>(hi) > m, "h(e_i, G_i) <= m");
        if (ai < 0) break;

        PathSearchReport sub = find_increasing_path(gi, ei, ai, t - 1, c_constant, mode);
        IncreasingPath piece = sub.path;
        const std::size_t want = static_cast<std::size_t>(std::ceil(ell));
        if (piece.length() > want && want >= 1)
            piece.verts.resize(want + 1);
        if (mode == SearchMode::kStrict)
            gate(piece.length() == want, "|P_i| != ceil(ell)");

        // splice the piece onto the assembled path
        std::vector<VertexId> incoming;
        if (i == 1) {
            incoming = piece.verts;
        } else {
            incoming.push_back(connector);
            std::size_t from = piece.verts[0] == connector ? 1 : 2;
            incoming.insert(incoming.end(), piece.verts.begin() + static_cast<std::ptrdiff_t>(from),
                            piece.verts.end());
        }
        std::vector<VertexId> appended;
        for (VertexId v : incoming) {
            if (used.count(v)) break;
            appended.push_back(v);
        }
        if (appended.size() < (i == 1 ? 2u : 1u)) break;
        for (VertexId v : appended) {
            acc.push_back(v);
            used.insert(v);
        }

        IterationLog lg;
        lg.index = static_cast<int>(i);
        lg.start_edge = ei;
        lg.start_height = hi;
        lg.piece_length = appended.size() - (i == 1 ? 1 : 0);
        if (acc.size() >= 2)
            lg.end_edge = g.base().find_edge(acc[acc.size() - 2], acc.back());

        if (i == iters || acc.size() < 2) {
            r.log.push_back(lg);
            break;
        }

        const VertexId y = acc.back();
        const VertexId x = acc[acc.size() - 2];
        EdgeId fi = g.base().find_edge(x, y);
        lg.end_edge = fi;
        lg.end_height = ti.contains(fi) ? ti.height(fi) : 0;

        // everything appended this round except the last two vertices gets deleted
        std::vector<VertexId> u_set;
        for (std::size_t k2 = 0; k2 + 2 < appended.size(); ++k2) u_set.push_back(appended[k2]);

        double m_use = m;
        if (mode == SearchMode::kBestEffort) {
            double lower = std::max(static_cast<double>(u_set.size()),
                                    std::sqrt(2.0 * gi.max_degree() * static_cast<double>(u_set.size())) *
                                        1.000001);
            lower = std::max(lower, 0.5);
            m_use = lower;
        }
        const double h_fi = lg.end_height;
        bool pre_ok = h_fi > 4.0 * m_use + 3.0 &&
                      m_use >= static_cast<double>(u_set.size()) &&
                      m_use * m_use / 2.0 >
                          static_cast<double>(gi.max_degree()) * static_cast<double>(u_set.size());
        if (mode == SearchMode::kStrict) gate(pre_ok, "length3 preconditions fail at iteration");
        if (!pre_ok) {
            lg.gates_ok = false;
            lg.note = "length3 preconditions not met; stopping";
            r.log.push_back(lg);
            break;
        }

        Length3Result hop;
        try {
            hop = length3_extension(gi, x, y, u_set, m_use);
        } catch (const std::exception& ex) {
            lg.gates_ok = false;
            lg.note = std::string("length3 failed: ") + ex.what();
            r.log.push_back(lg);
            break;
        }
        r.log.push_back(lg);

        if (used.count(hop.z) || used.count(hop.w)) break;
        gi = u_set.empty() ? gi : gi.without_vertices(u_set);
        ei = hop.zw;
        connector = hop.z;
    }

    if (acc.size() < 2) return finish(single_edge_path(table, g, e));

    auto trail_it = dense.trail_to.find(e1);
    if (trail_it == dense.trail_to.end()) return finish(single_edge_path(table, g, e));
    IncreasingPath assembled{acc};
    IncreasingPath joined = join_trail_path(g, trail_it->second, assembled);
    return finish(std::move(joined));
}

PathSearchReport longest_path_lower_bound(const GraphView& g, SearchMode mode, double c_constant) {
    const Rational d = g.average_degree();
    if (d < Rational(2)) throw std::invalid_argument("longest_path_lower_bound: average degree < 2");
    const double a = static_cast<double>((d / Rational(2)).floor() - 1);
    HeightTable table(g);
    EdgeId e = table.max_height_edge();

    int t = 1;
    const double la = a > 1.0 ? std::log2(a) : 0.0;
    const double lln = std::log2(log2n(g.num_vertices()));
    if (la > 0.0 && lln > 0.0)
        t = std::max(1, static_cast<int>(std::floor(std::sqrt(la / lln))));
    return find_increasing_path(g, e, a, t, c_constant, mode);
}

std::optional<bool> local_sparsity_exact(const GraphView& g, double epsilon, long long budget) {
    const double d = g.average_degree().to_double();
    const long long k = static_cast<long long>(std::floor(epsilon * d));
    const double bound = (0.5 - epsilon) * d;
    if (k <= 0) return bound >= 0.0;
    std::vector<VertexId> verts = g.vertices();
    const long long n = static_cast<long long>(verts.size());
    if (k > n) return std::nullopt;

    // enumeration cost check: C(n, k)
    double combos = 1.0;
    for (long long i = 0; i < k; ++i) combos *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (combos > static_cast<double>(budget)) return std::nullopt;

    std::vector<long long> idx(static_cast<size_t>(k));
    for (long long i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        int induced = 0;
        for (long long i = 0; i < k; ++i)
            for (long long j = i + 1; j < k; ++j) {
                EdgeId e = g.base().find_edge(verts[static_cast<size_t>(idx[static_cast<size_t>(i)])],
                                              verts[static_cast<size_t>(idx[static_cast<size_t>(j)])]);
                if (e != kNoEdge && g.edge_alive(e)) ++induced;
            }
        if (static_cast<double>(induced) > bound) return false;
        // next combination
        long long pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (long long i = pos + 1; i < k; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
    return true;
}

GreedyResult greedy_locally_sparse(const GraphView& g, double epsilon, SparsityCheck check,
                                   std::uint64_t sample_seed) {
    GreedyResult res;
    res.epsilon_d = epsilon * g.average_degree().to_double();
    if (g.num_edges() == 0) return res;

    HeightTable t(g);
    EdgeId e0 = t.max_height_edge();
    VertexId x0 = t.column(e0);
    VertexId x1 = g.base().edge(e0).other(x0);
    std::vector<VertexId>& path = res.path.verts;
    path = {x0, x1};
    std::set<VertexId> on_path{x0, x1};
    int last_h = t.height(e0);

    for (;;) {
        const VertexId cur = path.back();
        int chosen = 0;
        VertexId next = -1;
        for (int h = last_h - 1; h >= 1; --h) {
            EdgeId f = t.at(h, cur);
            if (f == kNoEdge)
                throw std::logic_error("greedy_locally_sparse: blank cell below a placed edge");
            VertexId y = g.base().edge(f).other(cur);
            if (!on_path.count(y)) {
                chosen = h;
                next = y;
                break;
            }
        }
        if (next == -1) break;
        path.push_back(next);
        on_path.insert(next);
        last_h = chosen;
    }

    if (check == SparsityCheck::kExact) {
        res.condition_verified = local_sparsity_exact(g, epsilon);
    } else if (check == SparsityCheck::kSampled) {
        // sampled evidence only; an exhaustive answer is not recorded
        std::mt19937_64 rng(sample_seed);
        const double d = g.average_degree().to_double();
        const int k = std::max<int>(1, static_cast<int>(std::floor(epsilon * d)));
        const double bound = (0.5 - epsilon) * d;
        std::vector<VertexId> verts = g.vertices();
        if (static_cast<int>(verts.size()) >= k) {
            for (int s = 0; s < 2000; ++s) {
                std::shuffle(verts.begin(), verts.end(), rng);
                int induced = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) {
                        EdgeId e = g.base().find_edge(verts[static_cast<size_t>(i)],
                                                      verts[static_cast<size_t>(j)]);
                        if (e != kNoEdge && g.edge_alive(e)) ++induced;
                    }
                if (static_cast<double>(induced) > bound) {
                    res.condition_verified = false; // a sampled counterexample is still exact
                    break;
                }
            }
        }
    }
    return res;
}

void write_report(std::ostream& out, const PathSearchReport& r) {
    for (const auto& lg : r.log) {
        out << "i=" << lg.index << " e_i=" << lg.start_edge << " h(e_i)=" << lg.start_height
            << " f_i=" << lg.end_edge << " h(f_i)=" << lg.end_height << " |P_i|=" << lg.piece_length
            << " gates=" << (lg.gates_ok ? "ok" : "fail");
        if (!lg.note.empty()) out << " note=" << lg.note;
        out << '\n';
    }
    out << "path:";
    for (VertexId v : r.path.verts) out << ' ' << v;
    out << '\n';
}

} // namespace eog
