#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "trigen/canonical.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/errors.hpp"
#include "trigen/families.hpp"
#include "trigen/graph.hpp"

using namespace trigen;
using namespace trigen::testing;

TEST_CASE("add_edge") {
    Graph p = prism();
    Graph grew = add_edge(p, 0, 4);
    CHECK(grew.vertex_count() == 6);
    CHECK(grew.edge_count() == 10);
    CHECK(grew.has_edge(0, 4));

    CHECK(add_edge(k5_minus_e(), 3, 4) == complete(5));

    CHECK_THROWS_AS(add_edge(p, 0, 1), AdjacentPairError);
    CHECK_THROWS_AS(add_edge(p, 2, 2), SelfLoopError);
    CHECK_THROWS_AS(add_edge(p, 0, 9), BadParameterError);
}

TEST_CASE("delete_edge") {
    Graph k5e = delete_edge(complete(5), {0, 1});
    CHECK(k5e.vertex_count() == 5);
    CHECK(k5e.edge_count() == 9);
    CHECK(are_isomorphic(k5e, k5_minus_e()));

    Graph cut = delete_edge(prism(), {0, 3});
    CHECK(cut.edge_count() == 8);
    CHECK_FALSE(is_three_connected(cut));
    CHECK_FALSE(flow_three_connected(cut));

    CHECK_THROWS_AS(delete_edge(prism(), Edge{0, 4}), MissingEdgeError);
}

TEST_CASE("delete_edge drops isolated vertices") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    Graph trimmed = delete_edge(star, {0, 3});
    CHECK(trimmed.vertex_count() == 3);
    CHECK(trimmed.edge_count() == 3);
}

TEST_CASE("contract_edge") {
    CHECK(contract_edge(complete(4), {0, 1}) == complete(3));
    CHECK(brute_force_isomorphic(contract_edge(prism(), {0, 3}), wheel(4)));
    CHECK(brute_force_isomorphic(contract_edge(cycle(6), {2, 3}), cycle(5)));
    CHECK_THROWS_AS(contract_edge(prism(), Edge{0, 4}), MissingEdgeError);
}

TEST_CASE("contract_edge output stays simple") {
    for (const auto& [name, g] : corpus()) {
        for (const Edge& e : g.edges()) {
            Graph c = contract_edge(g, e);
            CAPTURE(name);
            CHECK(c.vertex_count() == g.vertex_count() - 1);
            // representation is loop-free and parallel-free by construction;
            // degrees must stay within range
            CHECK(c.max_degree() <= c.vertex_count() - 1);
        }
    }
}

TEST_CASE("vertex_split") {
    Graph k5 = complete(5);
    Graph split = vertex_split(k5, SplitSpec{0, make_set({1, 2}), make_set({3, 4})});
    CHECK(split.vertex_count() == 6);
    CHECK(split.edge_count() == 11);
    CHECK(split.has_edge(0, 5)); // the new edge f
    CHECK(split.degree(0) == 3);
    CHECK(split.degree(5) == 3);

    for (int v = 0; v < 6; ++v) {
        VertexSet nb = prism().neighbors(v);
        CHECK_THROWS_AS(vertex_split(prism(), SplitSpec{v, nb & (nb - 1), nb & ~(nb & (nb - 1))}),
                        DegreeTooLowError);
    }
    CHECK_THROWS_AS(vertex_split(k5, SplitSpec{0, make_set({1}), make_set({2, 3, 4})}),
                    BadPartitionError);
    CHECK_THROWS_AS(vertex_split(k5, SplitSpec{0, make_set({1, 2}), make_set({3, 4, 0})}),
                    BadPartitionError);
}

TEST_CASE("enumerate_splits") {
    CHECK(enumerate_splits(prism()).empty());
    CHECK(enumerate_splits(complete(5)).size() == 15);
    CHECK(enumerate_splits(complete(5)).size() == brute_count_splits(complete(5)));

    auto w4_splits = enumerate_splits(wheel(4));
    CHECK(w4_splits.size() == 3);
    for (const SplitSpec& s : w4_splits) CHECK(s.target == 4); // hub only

    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        CHECK(static_cast<int>(enumerate_splits(g).size()) == brute_count_splits(g));
    }
}

TEST_CASE("triads") {
    CHECK(triads(prism()).size() == 6);
    CHECK(triads(complete(5)).empty());
    auto w4 = triads(wheel(4));
    CHECK(w4.size() == 4);
    for (const Triad& t : w4)
        for (const Edge& e : t) CHECK(wheel(4).has_edge(e.first, e.second));
}

TEST_CASE("rank") {
    CHECK(rank(prism()) == 5);
    for (int p = 3; p <= 6; ++p) CHECK(rank(k3p_variant(p, 0)) == p + 2);
    CHECK(rank(complete(4)) == 3);
    Graph disconnected(5, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(rank(disconnected), DisconnectedError);
}

TEST_CASE("split then contract the new edge is the identity up to isomorphism") {
    for (const auto& [name, g] : three_connected_corpus()) {
        CAPTURE(name);
        for (const SplitSpec& s : enumerate_splits(g)) {
            Graph grown = vertex_split(g, s);
            CHECK(grown.edge_count() == g.edge_count() + 1);
            CHECK(grown.vertex_count() == g.vertex_count() + 1);
            Graph back = contract_edge(grown, make_edge(s.target, g.vertex_count()));
            CHECK(are_isomorphic(back, g));
        }
    }
}

TEST_CASE("splits and additions preserve 3-connectivity") {
    for (const auto& [name, g] : three_connected_corpus()) {
        CAPTURE(name);
        for (const SplitSpec& s : enumerate_splits(g)) {
            Graph grown = vertex_split(g, s);
            CHECK(is_three_connected(grown));
            CHECK(flow_three_connected(grown));
        }
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int w = u + 1; w < g.vertex_count(); ++w) {
                if (g.has_edge(u, w)) continue;
                Graph grown = add_edge(g, u, w);
                CHECK(is_three_connected(grown));
                CHECK(flow_three_connected(grown));
            }
    }
}
