#include "eog/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace eog {

namespace {

std::vector<int> shuffled_ranks(int m, std::mt19937_64& rng) {
    std::vector<int> ranks(static_cast<size_t>(m));
    std::iota(ranks.begin(), ranks.end(), 1);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    return ranks;
}

} // namespace

OrderedGraph complete_graph_lex(int n) {
    std::vector<Edge> edges;
    int rank = 1;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, rank++});
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph random_ordering(const OrderedGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm = shuffled_ranks(g.num_edges(), rng);
    return g.with_ranks(perm);
}

OrderedGraph gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (p >= 1.0 || (p > 0.0 && coin(rng))) edges.push_back({u, v, 0});
    std::vector<int> ranks = shuffled_ranks(static_cast<int>(edges.size()), rng);
    for (size_t i = 0; i < edges.size(); ++i) edges[i].rank = ranks[i];
    return OrderedGraph(n, std::move(edges));
}

AppendixAGraph appendix_a_graph(const AppendixAParams& params) {
    const int n = params.n;
    if (n < 2) throw std::invalid_argument("appendix_a_graph: n too small");
    const double eps = params.epsilon;
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("appendix_a_graph: epsilon outside (0,1)");

    AppendixAGraph out;
    out.n = n;
    out.epsilon = eps;
    out.ell = static_cast<int>(std::floor((1.0 - eps) * std::log2(static_cast<double>(n)) - 1.0));
    out.base_width = static_cast<int>(std::floor(std::pow(static_cast<double>(n), eps)));
    if (out.ell < 1 || out.base_width < 1)
        throw std::invalid_argument("appendix_a_graph: parameter regime gives no layers");

    out.layer_begin.resize(static_cast<size_t>(out.ell) + 1);
    int next = n;
    for (int i = 1; i <= out.ell; ++i) {
        out.layer_begin[static_cast<size_t>(i - 1)] = next;
        next += (1 << i) * out.base_width;
    }
    out.layer_begin[static_cast<size_t>(out.ell)] = next;

    std::mt19937_64 rng(params.seed);
    std::vector<Edge> edges;
    for (int i = 1; i <= out.ell; ++i) {
        double p = 4.0 / (static_cast<double>(1 << i) * out.ell);
        if (p > 1.0) {
            p = 1.0;
            out.probability_clamped = true;
        }
        std::bernoulli_distribution coin(p);
        const int b_lo = out.layer_begin[static_cast<size_t>(i - 1)];
        const int b_hi = out.layer_begin[static_cast<size_t>(i)];
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = b_lo; b < b_hi; ++b)
                if (coin(rng)) edges.push_back({a, b, 0});
    }
    std::vector<int> ranks = shuffled_ranks(static_cast<int>(edges.size()), rng);
    for (size_t i = 0; i < edges.size(); ++i) edges[i].rank = ranks[i];

    int total = next;
    if (params.pad_isolated) total = std::max(total, 2 * n);
    out.graph = OrderedGraph(total, std::move(edges));
    return out;
}

AppendixAReport appendix_a_checks(const AppendixAGraph& g, int samples, std::uint64_t seed,
                                  double k_ratio) {
    AppendixAReport rep;
    rep.edge_count = g.graph.num_edges();
    rep.edge_threshold = 2.0 * std::pow(static_cast<double>(g.n), 1.0 + g.epsilon);
    rep.edge_count_ok = static_cast<double>(rep.edge_count) >= rep.edge_threshold;

    const double neps = std::pow(static_cast<double>(g.n), g.epsilon);
    const int m_lo = std::max(1, static_cast<int>(std::ceil(std::pow(static_cast<double>(g.n), g.epsilon / 2.0))));
    std::mt19937_64 rng(seed);
    std::vector<VertexId> a_pool(static_cast<size_t>(g.n));
    std::iota(a_pool.begin(), a_pool.end(), 0);
    std::vector<char> in_a(static_cast<size_t>(g.graph.num_vertices()), 0);

    for (int s = 0; s < samples; ++s) {
        std::uniform_int_distribution<int> pick_m(m_lo, g.n);
        const int m = pick_m(rng);
        int r = static_cast<int>(std::ceil(std::log2(static_cast<double>(m) / (4.0 * k_ratio * k_ratio * neps))));
        r = std::clamp(r, 0, g.ell);

        std::vector<VertexId> b_pool;
        for (int i = r + 1; i <= g.ell; ++i)
            for (VertexId b = g.layer_begin[static_cast<size_t>(i - 1)];
                 b < g.layer_begin[static_cast<size_t>(i)]; ++b)
                b_pool.push_back(b);
        std::shuffle(a_pool.begin(), a_pool.end(), rng);
        std::shuffle(b_pool.begin(), b_pool.end(), rng);
        const int asz = std::min<int>(m, g.n);
        const int bsz = std::min<int>(m, static_cast<int>(b_pool.size()));
        for (int i = 0; i < asz; ++i) in_a[static_cast<size_t>(a_pool[static_cast<size_t>(i)])] = 1;

        long long crossing = 0;
        for (int i = 0; i < bsz; ++i)
            for (EdgeId f : g.graph.incident(b_pool[static_cast<size_t>(i)]))
                if (in_a[static_cast<size_t>(g.graph.edge(f).other(b_pool[static_cast<size_t>(i)]))]) ++crossing;
        for (int i = 0; i < asz; ++i) in_a[static_cast<size_t>(a_pool[static_cast<size_t>(i)])] = 0;

        const double bound = 32.0 * k_ratio * k_ratio * neps * static_cast<double>(m) / g.ell;
        ++rep.samples;
        if (static_cast<double>(crossing) <= bound) ++rep.samples_passed;
    }
    return rep;
}

void write_layer_metadata(std::ostream& out, const AppendixAGraph& g) {
    out << "n " << g.n << "\nepsilon " << g.epsilon << "\nell " << g.ell << "\nbase_width "
        << g.base_width << "\nclamped " << (g.probability_clamped ? 1 : 0) << '\n';
    for (int i = 1; i <= g.ell; ++i)
        out << "layer " << i << " start " << g.layer_begin[static_cast<size_t>(i - 1)] << " size "
            << (g.layer_begin[static_cast<size_t>(i)] - g.layer_begin[static_cast<size_t>(i - 1)]) << '\n';
}

} // namespace eog
