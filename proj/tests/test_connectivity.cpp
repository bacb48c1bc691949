#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/errors.hpp"
#include "trigen/families.hpp"

using namespace trigen;
using namespace trigen::testing;

TEST_CASE("is_three_connected basics") {
    CHECK(is_three_connected(complete(4)));
    CHECK_FALSE(is_three_connected(cycle(6)));
    CHECK(is_three_connected(prism()));
    CHECK_FALSE(is_three_connected(complete(3)));
    CHECK_FALSE(is_three_connected(Graph(5, {{0, 1}, {2, 3}})));
}

TEST_CASE("agrees with the flow oracle") {
    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        CHECK(is_three_connected(g) == flow_three_connected(g));
    }
    std::mt19937 rng(20240818);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 55) g.link(u, v);
        bool lib = is_three_connected(g);
        CHECK(lib == flow_three_connected(g));
        if (lib) ++positives;
    }
    CHECK(positives > 20); // the sample actually exercises both outcomes
}

TEST_CASE("deletable_edges") {
    CHECK(deletable_edges(prism()).empty());
    CHECK(deletable_edges(complete(5)).size() == 10);
    CHECK(deletable_edges(wheel(4)).empty());
    CHECK_THROWS_AS(deletable_edges(cycle(6)), NotThreeConnectedError);

    for (const auto& [name, g] : three_connected_corpus()) {
        CAPTURE(name);
        std::vector<Edge> expect;
        for (const Edge& e : g.edges())
            if (flow_three_connected(delete_edge(g, e))) expect.push_back(e);
        CHECK(deletable_edges(g) == expect);
    }
}

TEST_CASE("is_minimally_three_connected") {
    CHECK(is_minimally_three_connected(prism()));
    CHECK_FALSE(is_minimally_three_connected(complete(5)));
    CHECK(is_minimally_three_connected(k3p_variant(3, 0)));
    CHECK(is_minimally_three_connected(petersen()));
    CHECK(is_minimally_three_connected(wheel(6)));
    CHECK_FALSE(is_minimally_three_connected(k3p_variant(3, 1)));
    CHECK_THROWS_AS(is_minimally_three_connected(cycle(5)), NotThreeConnectedError);
}
