#include <doctest.h>

#include <random>

#include "eog/generators.hpp"
#include "eog/oracle.hpp"

using namespace eog;

TEST_CASE("exhaustive longest monotone path on tiny shapes") {
    OrderedGraph k3(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    OracleResult r = longest_monotone_path(GraphView(k3));
    CHECK(r.optimum == 2);
    CHECK(validate_path(GraphView(k3), r.witness).ok);
    CHECK(r.witness.length() == 2);

    OrderedGraph single(2, {{0, 1, 1}});
    CHECK(longest_monotone_path(GraphView(single)).optimum == 1);

    OrderedGraph none(3, {});
    CHECK(longest_monotone_path(GraphView(none)).optimum == 0);
}

TEST_CASE("oracle refuses oversized inputs") {
    OrderedGraph big = complete_graph_lex(15);
    CHECK_THROWS(longest_monotone_path(GraphView(big)));
}

TEST_CASE("longest increasing path from a fixed edge") {
    OrderedGraph k3(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    GraphView v(k3);
    CHECK(longest_increasing_from(v, k3.find_edge(0, 1)).optimum == 2);
    // from the globally max-rank edge nothing can follow
    CHECK(longest_increasing_from(v, k3.edge_by_rank(3)).optimum == 1);
}

TEST_CASE("height floor above the start edge yields the zero sentinel") {
    OrderedGraph k3(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    GraphView v(k3);
    EdgeId ca = k3.find_edge(0, 2); // height 1
    OracleResult r = longest_increasing_from(v, ca, 2);
    CHECK(r.optimum == 0);
    CHECK(r.empty_feasible_set);
}

TEST_CASE("reversing all ranks preserves the optimum") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        OrderedGraph g = gnp(10, 0.5, rng());
        if (g.num_edges() == 0) continue;
        const int m = g.num_edges();
        std::vector<int> rev(static_cast<size_t>(m));
        for (int r = 1; r <= m; ++r) rev[static_cast<size_t>(r - 1)] = m + 1 - r;
        OrderedGraph flipped = g.with_ranks(rev);
        CHECK(longest_monotone_path(GraphView(g)).optimum ==
              longest_monotone_path(GraphView(flipped)).optimum);
    }
}

TEST_CASE("altitude of tiny shapes") {
    CHECK(altitude(complete_graph_lex(3)) == 2);
    OrderedGraph p2(3, {{0, 1, 1}, {1, 2, 2}});
    CHECK(altitude(p2) == 2);
    OrderedGraph single(2, {{0, 1, 1}});
    CHECK(altitude(single) == 1);
    OrderedGraph none(3, {});
    CHECK(altitude(none) == 0);
}

TEST_CASE("altitude guard and override") {
    CHECK_THROWS(altitude(complete_graph_lex(5))); // 10 edges > default 8
    // a 9-edge path is above the default guard but fine when pushed to 10
    std::vector<Edge> edges;
    for (int i = 0; i < 9; ++i) edges.push_back({i, i + 1, i + 1});
    OrderedGraph p9(10, std::move(edges));
    CHECK_THROWS(altitude(p9));
    CHECK(altitude(p9, 10) >= 1);
    CHECK_THROWS(altitude(complete_graph_lex(6), 12)); // hard cap stays at 10
}

TEST_CASE("altitude of small complete graphs stays under 3n/4") {
    CHECK(altitude(complete_graph_lex(3)) * 4 <= 3 * 3);
    CHECK(altitude(complete_graph_lex(4)) * 4 <= 3 * 4);
}

TEST_CASE("witness always revalidates") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        OrderedGraph g = gnp(9, 0.6, rng());
        if (g.num_edges() == 0) continue;
        GraphView v(g);
        OracleResult r = longest_monotone_path(v);
        CHECK(validate_path(v, r.witness).ok);
        CHECK(r.witness.length() == static_cast<size_t>(r.optimum));
        CHECK(r.explored > 0);
    }
}
