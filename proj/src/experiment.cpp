#include "eog/experiment.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "eog/generators.hpp"
#include "eog/height_table.hpp"
#include "eog/oracle.hpp"
#include "eog/regularise.hpp"

namespace fs = std::filesystem;

namespace eog {

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t instance_seed(int n, int s) {
    return (static_cast<std::uint64_t>(n) << 24) ^ static_cast<std::uint64_t>(s);
}

std::vector<std::pair<std::string, OrderedGraph>> instance_matrix(const RunConfig& cfg) {
    std::vector<std::pair<std::string, OrderedGraph>> out;
    if (!cfg.input_file.empty()) {
        out.emplace_back(cfg.input_file, load_graph(cfg.input_file));
        return out;
    }
    for (int n : cfg.ns)
        for (int s = 0; s < cfg.seeds; ++s) {
            std::ostringstream name;
            name << "K" << n << "_s" << s;
            out.emplace_back(name.str(), random_ordering(complete_graph_lex(n), instance_seed(n, s)));
        }
    return out;
}

void ensure_dir(const std::string& dir) { fs::create_directories(dir); }

void dump_reproducer(const RunConfig& cfg, const std::string& name, const OrderedGraph& g,
                     const std::string& detail) {
    ensure_dir(cfg.resolved_out_dir());
    const std::string path = cfg.resolved_out_dir() + "/repro_" + name + ".eog";
    std::ofstream out(path);
    out << "c reproducer: " << detail << '\n';
    write_graph(out, g);
}

void write_manifest(const RunConfig& cfg, const std::string& command) {
    std::ofstream out(cfg.resolved_out_dir() + "/manifest_" + command + ".txt");
    out << "command " << command << "\nversion " << kVersion << "\nseeds " << cfg.seeds << "\nns";
    for (int n : cfg.ns) out << ' ' << n;
    out << "\nstrategies";
    for (const auto& s : cfg.strategies) out << ' ' << s;
    out << "\noracle " << (cfg.oracle ? 1 : 0) << "\nc_constant " << cfg.c_constant << "\nmode "
        << (cfg.mode == SearchMode::kStrict ? "strict" : "best-effort") << "\nepsilon " << cfg.epsilon
        << "\ninput " << (cfg.input_file.empty() ? "-" : cfg.input_file) << '\n';
}

IncreasingPath run_strategy(const std::string& strategy, const GraphView& g, const RunConfig& cfg) {
    if (strategy == "greedy")
        return greedy_locally_sparse(g, cfg.epsilon, SparsityCheck::kOff).path;
    if (strategy == "find") {
        HeightTable t(g);
        EdgeId e = t.max_height_edge();
        if (e == kNoEdge) return {};
        const double a = static_cast<double>(t.height(e)) - 1.0;
        if (a < 1.0) {
            VertexId u = t.column(e);
            return IncreasingPath{{u, g.base().edge(e).other(u)}};
        }
        return find_increasing_path(g, e, a, 2, cfg.c_constant, cfg.mode).path;
    }
    if (strategy == "lower-bound")
        return longest_path_lower_bound(g, cfg.mode, cfg.c_constant).path;
    throw std::invalid_argument("unknown strategy: " + strategy);
}

} // namespace

std::string RunConfig::resolved_out_dir() const {
    if (!out_dir.empty()) return out_dir;
    if (const char* env = std::getenv("EOG_OUT_DIR"); env && *env) return env;
    return "out";
}

int run_verify(const RunConfig& cfg, std::ostream& log) {
    std::vector<std::pair<std::string, OrderedGraph>> matrix;
    try {
        matrix = instance_matrix(cfg);
    } catch (const std::exception& ex) {
        log << "FAIL: bad instance source: " << ex.what() << '\n';
        return 1;
    }
    if (matrix.empty()) {
        log << "warning: empty instance matrix, nothing to verify\n";
        return 0;
    }
    int checked = 0;
    for (const auto& [name, base] : matrix) {
        GraphView g(base);
        auto fail = [&](const std::string& what) {
            log << "FAIL " << name << ": " << what << '\n';
            dump_reproducer(cfg, name, base, what);
            return 1;
        };

        HeightTable t(g);
        if (auto r = check_lex_implies_rank(t, g); !r.ok) return fail("rank law: " + r.detail);
        for (VertexId v = 0; v < base.num_vertices(); ++v) {
            for (int row = 1; row <= t.column_height(v); ++row)
                if (t.at(row, v) == kNoEdge) return fail("column not prefix-filled");
        }
        if (base.num_edges() > 0 &&
            Rational(2 * static_cast<std::int64_t>(t.max_height())) < g.average_degree())
            return fail("no edge of height >= avg degree / 2");

        if (base.num_edges() > 1) {
            EdgeId victim = base.edge_by_rank(1 + (checked % base.num_edges()));
            if (auto r = check_subgraph_monotonicity(g, g.without_edges({victim})); !r.ok)
                return fail("subgraph monotonicity: " + r.detail);
        }

        RegularisationResult reg = regularise(g);
        if (!reg.degenerate && reg.subgraph.num_vertices() > 0) {
            for (VertexId v : reg.subgraph.vertices()) {
                Rational deg(reg.subgraph.degree(v));
                if (deg < reg.d_prime || Rational(6) * reg.d_prime < deg)
                    return fail("regularised degree outside [d', 6d']");
            }
        }

        for (const auto& strategy : cfg.strategies) {
            IncreasingPath p = run_strategy(strategy, g, cfg);
            if (p.verts.size() >= 2 && !validate_path(g, p).ok)
                return fail("strategy " + strategy + " emitted an invalid path");
        }
        ++checked;
    }
    log << "verified " << checked << " instances\n";
    return 0;
}

int run_paths(const RunConfig& cfg, std::ostream& log) {
    auto matrix = instance_matrix(cfg);
    ensure_dir(cfg.resolved_out_dir());
    write_manifest(cfg, "paths");
    std::ofstream csv(cfg.resolved_out_dir() + "/paths.csv");
    std::ofstream timings(cfg.resolved_out_dir() + "/paths_timings.txt");
    csv << "instance,n,m,strategy,length,oracle_optimum,ratio\n";

    for (const auto& [name, base] : matrix) {
        GraphView g(base);
        int optimum = -1;
        if (cfg.oracle && base.num_vertices() <= 10 && base.num_edges() > 0)
            optimum = longest_monotone_path(g).optimum;
        for (const auto& strategy : cfg.strategies) {
            const auto t0 = std::chrono::steady_clock::now();
            IncreasingPath p = run_strategy(strategy, g, cfg);
            const auto t1 = std::chrono::steady_clock::now();
            if (p.verts.size() >= 2) {
                auto v = validate_path(g, p);
                if (!v.ok) {
                    log << "FAIL " << name << '/' << strategy << ": invalid path: " << v.detail << '\n';
                    return 1;
                }
            }
            csv << name << ',' << base.num_vertices() << ',' << base.num_edges() << ',' << strategy
                << ',' << p.length() << ',';
            if (optimum >= 0)
                csv << optimum << ','
                    << (optimum > 0 ? static_cast<double>(p.length()) / optimum : 0.0);
            else
                csv << "-,-";
            csv << '\n';
            timings << name << ',' << strategy << ','
                    << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()
                    << "us\n";
        }
    }
    log << "wrote " << cfg.resolved_out_dir() << "/paths.csv\n";
    return 0;
}

int run_altitude(const RunConfig& cfg, std::ostream& log) {
    ensure_dir(cfg.resolved_out_dir());
    write_manifest(cfg, "altitude");
    std::ofstream csv(cfg.resolved_out_dir() + "/altitude.csv");
    csv << "shape,n,m,altitude\n";

    std::vector<std::pair<std::string, OrderedGraph>> shapes;
    if (!cfg.input_file.empty()) {
        shapes.emplace_back(cfg.input_file, load_graph(cfg.input_file));
    } else {
        shapes.emplace_back("P2", OrderedGraph(3, {{0, 1, 1}, {1, 2, 2}}));
        shapes.emplace_back("K3", complete_graph_lex(3));
        shapes.emplace_back("K4", complete_graph_lex(4));
    }
    for (const auto& [name, g] : shapes) {
        if (g.num_edges() > cfg.altitude_guard) {
            log << "refusing " << name << ": " << g.num_edges() << " edges exceeds guard "
                << cfg.altitude_guard << '\n';
            continue;
        }
        csv << name << ',' << g.num_vertices() << ',' << g.num_edges() << ','
            << altitude(g, cfg.altitude_guard) << '\n';
    }
    log << "wrote " << cfg.resolved_out_dir() << "/altitude.csv\n";
    return 0;
}

int run_gen(const RunConfig& cfg, std::ostream& log) {
    ensure_dir(cfg.resolved_out_dir());
    write_manifest(cfg, "gen");
    auto matrix = instance_matrix(cfg);
    for (const auto& [name, g] : matrix) {
        std::ofstream out(cfg.resolved_out_dir() + "/" + name + ".eog");
        write_graph(out, g);
    }
    log << "wrote " << matrix.size() << " instances to " << cfg.resolved_out_dir() << '\n';
    return 0;
}

int run_table(const RunConfig& cfg, std::ostream& log) {
    OrderedGraph g = cfg.input_file.empty()
                         ? complete_graph_lex(cfg.ns.empty() ? 4 : cfg.ns.front())
                         : load_graph(cfg.input_file);
    GraphView v(g);
    HeightTable t(v);
    t.dump(log);
    return 0;
}

} // namespace eog
