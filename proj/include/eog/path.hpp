#ifndef EOG_PATH_HPP
#define EOG_PATH_HPP

#include <cstddef>
#include <vector>

#include "eog/graph.hpp"
#include "eog/height_table.hpp"

namespace eog {

// Directed vertex sequence with strictly increasing edge ranks and no
// repeated vertices. Length counts edges.
struct IncreasingPath {
    std::vector<VertexId> verts;

    std::size_t length() const { return verts.empty() ? 0 : verts.size() - 1; }
    bool empty() const { return verts.size() < 2; }
};

// Same, but only edges must be distinct; vertices may repeat.
struct IncreasingTrail {
    std::vector<VertexId> verts;

    std::size_t length() const { return verts.empty() ? 0 : verts.size() - 1; }
};

// Independent validators: these read only adjacency and ranks, never height
// tables, so they can vet the output of every path-building strategy.
CheckResult validate_path(const GraphView& g, const IncreasingPath& p);
CheckResult validate_trail(const GraphView& g, const IncreasingTrail& w);

// reversing a decreasing path yields the canonical increasing form
IncreasingPath reversed(const IncreasingPath& p);

} // namespace eog

#endif
