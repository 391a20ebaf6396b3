#ifndef EOG_PATHFINDER_HPP
#define EOG_PATHFINDER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eog/graph.hpp"
#include "eog/path.hpp"
#include "eog/rational.hpp"

namespace eog {

struct DenseReachResult {
    GraphView subgraph; // H with avg degree >= h
    std::unordered_map<EdgeId, IncreasingTrail> trail_to; // one trail per edge of H
    int layers = 0;     // the stopping index k
};

// Breadth-layered exploration of controlled trails from e. Every edge of the
// returned subgraph is reachable from e by an increasing trail of length at
// most 2 + log n whose edges keep height >= h(e,G) - 7h(log n + 2).
// Requires h(e,G) >= 21 * h * log n (n may be overridden by n_upper).
DenseReachResult reachable_dense_subgraph(const GraphView& g, EdgeId e, double h,
                                          int n_upper = 0);

// Combine an increasing trail w (ending with edge f) and an increasing path p
// (starting with the same edge f) into an increasing path that starts with
// w's first edge and has length >= len(p)/(len(w)+1) - 1.
IncreasingPath join_trail_path(const GraphView& g, const IncreasingTrail& w,
                               const IncreasingPath& p);

enum class SearchMode { kStrict, kBestEffort };

struct IterationLog {
    int index = 0;
    EdgeId start_edge = kNoEdge;
    EdgeId end_edge = kNoEdge;
    int start_height = 0;
    int end_height = 0;
    std::size_t piece_length = 0;
    bool gates_ok = true;
    std::string note;
};

struct PathSearchReport {
    IncreasingPath path;
    SearchMode mode = SearchMode::kBestEffort;
    EdgeId start_edge = kNoEdge;
    double window = 0;            // the parameter a: heights stay >= h(e,G) - a
    bool window_satisfied = true; // h(f,G) >= h(e,G) - a for every edge f
    bool guarantee_satisfied = false; // strict length bound reached
    double length_target = 0;
    std::vector<IterationLog> log;
};

// one line per iteration, then the final path as a vertex-id sequence
void write_report(std::ostream& out, const PathSearchReport& r);

// Recursive search for an increasing path starting with e whose edges all
// keep height >= h(e,G) - a. In strict mode the paper constants are used
// verbatim and every claim inequality is recorded; in best-effort mode gate
// failures degrade to the longest valid path assembled so far.
PathSearchReport find_increasing_path(const GraphView& g, EdgeId e, double a, int t,
                                      double c_constant = 70.0,
                                      SearchMode mode = SearchMode::kBestEffort);

// Wrapper: a = floor(avg/2) - 1, e = the max-height edge,
// t = floor(sqrt(log a / log log n)) clamped to >= 1.
PathSearchReport longest_path_lower_bound(const GraphView& g,
                                          SearchMode mode = SearchMode::kBestEffort,
                                          double c_constant = 70.0);

struct GreedyResult {
    IncreasingPath path;
    // set when the local-sparsity hypothesis was decided exactly; empty when
    // only sampled evidence was gathered or the check was skipped
    std::optional<bool> condition_verified;
    double epsilon_d = 0; // the promised length when the condition holds
};

enum class SparsityCheck { kOff, kExact, kSampled };

// Greedy height-table descent: start at a max-height edge and repeatedly take
// the highest usable cell in the current endpoint's column.
GreedyResult greedy_locally_sparse(const GraphView& g, double epsilon,
                                   SparsityCheck check = SparsityCheck::kOff,
                                   std::uint64_t sample_seed = 0);

// Exact check of "every set of at most eps*d vertices induces at most
// (1/2-eps)*d edges" by enumerating subsets of size floor(eps*d); empty
// optional when enumeration is infeasible under `budget` subsets.
std::optional<bool> local_sparsity_exact(const GraphView& g, double epsilon,
                                         long long budget = 2'000'000);

} // namespace eog

#endif
