#include "eog/path.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eog {

namespace {

CheckResult validate_sequence(const GraphView& g, const std::vector<VertexId>& verts,
                              bool vertices_distinct) {
    std::set<VertexId> seen_v;
    std::set<EdgeId> seen_e;
    int last_rank = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
        VertexId v = verts[i];
        if (v < 0 || v >= g.base().num_vertices() || !g.vertex_alive(v))
            return {false, "vertex not in view"};
        if (vertices_distinct && !seen_v.insert(v).second) {
            std::ostringstream os;
            os << "repeated vertex " << v;
            return {false, os.str()};
        }
        if (i == 0) continue;
        EdgeId e = g.base().find_edge(verts[i - 1], v);
        if (e == kNoEdge || !g.edge_alive(e)) return {false, "missing edge along sequence"};
        if (!seen_e.insert(e).second) return {false, "repeated edge"};
        int r = g.base().rank(e);
        if (r <= last_rank) {
            std::ostringstream os;
            os << "ranks not strictly increasing (" << last_rank << " then " << r << ")";
            return {false, os.str()};
        }
        last_rank = r;
    }
    return {};
}

} // namespace

CheckResult validate_path(const GraphView& g, const IncreasingPath& p) {
    return validate_sequence(g, p.verts, true);
}

CheckResult validate_trail(const GraphView& g, const IncreasingTrail& w) {
    return validate_sequence(g, w.verts, false);
}

IncreasingPath reversed(const IncreasingPath& p) {
    IncreasingPath out = p;
    std::reverse(out.verts.begin(), out.verts.end());
    return out;
}

} // namespace eog
