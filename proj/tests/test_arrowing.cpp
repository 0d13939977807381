#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sizeramsey/arrowing.hpp"
#include "sizeramsey/errors.hpp"

using namespace sizeramsey;

namespace {

const Forbidden c4_pair{{2, 2}, {2, 2}};

EdgeMask all_edges(const SmallGraph& g) { return EdgeMask(g.edge_count(), true); }

SmallGraph random_graph(std::mt19937& rng, int n, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (keep(rng)) edges.emplace_back(u, v);
        }
    }
    return SmallGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph constructors") {
    CHECK(complete_bipartite(2, 2).vertex_count() == 4);
    CHECK(complete_bipartite(2, 2).edge_count() == 4);
    CHECK(complete_bipartite(3, 7).vertex_count() == 10);
    CHECK(complete_bipartite(3, 7).edge_count() == 21);
    CHECK(complete_bipartite(3, 7).edges()[1] == std::pair{0, 4});
    CHECK(complete_bipartite(1, 1).edge_count() == 1);
    CHECK(complete(3).edge_count() == 3);
    CHECK(complete(6).edge_count() == 15);
    CHECK(complete(2).edge_count() == 1);
    CHECK_THROWS_AS(complete(11), InstanceTooLarge);
    CHECK_THROWS_AS(complete_bipartite(20, 13), InstanceTooLarge);
    CHECK_THROWS_AS(SmallGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("has_mono_kst examples") {
    const auto k22 = complete_bipartite(2, 2);
    CHECK(has_mono_kst(k22, all_edges(k22), 2, 2));
    CHECK_FALSE(has_mono_kst(k22, EdgeMask{true, true, true, false}, 2, 2));
    const auto k6 = complete(6);
    CHECK(has_mono_kst(k6, all_edges(k6), 2, 2));
    CHECK(has_mono_kst(k6, all_edges(k6), 3, 3));
    CHECK_FALSE(has_mono_kst(k6, all_edges(k6), 3, 4));
    CHECK(has_mono_kst(k6, all_edges(k6), 2, 4));
    CHECK(has_mono_kst(k6, all_edges(k6), 4, 2));
    CHECK_FALSE(has_mono_kst(k6, all_edges(k6), 1, 6));
    CHECK_THROWS_AS(has_mono_kst(k22, EdgeMask{true}, 1, 1), std::invalid_argument);
}

TEST_CASE("has_mono_kst agrees with a naive check on random graphs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + trial % 6;
        const auto g = random_graph(rng, n, 0.3 + 0.1 * (trial % 6));
        std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        }
        for (int s = 1; s <= 3; ++s) {
            for (int t = 1; t <= 4; ++t) {
                CHECK(has_mono_kst(g, all_edges(g), s, t) == oracle::contains_kst_naive(n, adj, s, t));
            }
        }
    }
}

TEST_CASE("arrows reference instances") {
    CHECK(arrows(complete(6), c4_pair, 2).arrows);
    CHECK(arrows(complete_bipartite(3, 7), c4_pair, 2).arrows);
    CHECK(arrows(complete_bipartite(1, 4), {{1, 2}, {1, 2}}, 2).arrows);

    const auto k36 = complete_bipartite(3, 6);
    const auto avoided = arrows(k36, c4_pair, 2);
    REQUIRE_FALSE(avoided.arrows);
    REQUIRE(avoided.certificate.has_value());
    CHECK(avoided.certificate->size() == 18);
    CHECK(certificate_avoids(k36, c4_pair, *avoided.certificate));
    CHECK(avoided.certificate == oracle::first_avoiding_colouring(k36, c4_pair));
}

TEST_CASE("backtracking agrees with flat enumeration") {
    const std::vector<std::pair<SmallGraph, Forbidden>> cases{
        {complete_bipartite(2, 5), c4_pair},
        {complete_bipartite(3, 4), c4_pair},
        {complete(4), c4_pair},
        {complete(5), c4_pair},
        {complete(5), {{1, 2}, {2, 2}}},
        {complete(4), {{1, 3}, {1, 2}}},
        {complete_bipartite(2, 4), {{1, 2}, {1, 3}}},
        {complete_bipartite(1, 3), {{1, 2}, {1, 2}}},
        {complete_bipartite(1, 2), {{1, 2}, {1, 2}}},
        {complete(4), {{1, 2}, {1, 2}, {1, 2}}},
        {complete(5), {{1, 3}, {1, 3}, {1, 2}}},
    };
    for (const auto& [graph, forbidden] : cases) {
        const auto got = arrows(graph, forbidden, static_cast<int>(forbidden.size()));
        const auto want = oracle::first_avoiding_colouring(graph, forbidden);
        CHECK(got.arrows == !want.has_value());
        CHECK(got.certificate == want);
    }
}

TEST_CASE("adding edges preserves arrowing") {
    std::mt19937 rng(41);
    int arrowing = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(rng, 6, 0.7);
        const Forbidden forbidden{{1, 2 + trial % 2}, {2, 2}};
        const bool base = arrows(g, forbidden, 2).arrows;
        auto edges = g.edges();
        for (int u = 0; u < 6; ++u) {
            for (int v = u + 1; v < 6; ++v) {
                if (std::find(edges.begin(), edges.end(), std::pair{u, v}) == edges.end()) {
                    edges.emplace_back(u, v);
                    break;
                }
            }
        }
        const SmallGraph bigger(6, edges);
        if (base) {
            ++arrowing;
            CHECK(arrows(bigger, forbidden, 2).arrows);
        }
    }
    CHECK(arrowing > 0);
}

TEST_CASE("renaming colours together with the forbidden list") {
    const auto g = complete(5);
    const Forbidden forbidden{{1, 3}, {2, 2}, {1, 2}};
    std::vector<int> perm{0, 1, 2};
    const bool base = arrows(g, forbidden, 3).arrows;
    do {
        Forbidden permuted;
        for (int i : perm) permuted.push_back(forbidden[static_cast<std::size_t>(i)]);
        const auto result = arrows(g, permuted, 3);
        CHECK(result.arrows == base);
        if (result.certificate) CHECK(certificate_avoids(g, permuted, *result.certificate));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const auto k24 = complete_bipartite(2, 4);
    CHECK(arrows(k24, {{1, 2}, {1, 3}}, 2).arrows == arrows(k24, {{1, 3}, {1, 2}}, 2).arrows);
}

TEST_CASE("parallel search returns the sequential answer and certificate") {
    const std::vector<SmallGraph> graphs{complete_bipartite(3, 6), complete_bipartite(3, 7), complete(6),
                                         complete(5)};
    for (const auto& g : graphs) {
        const auto sequential = arrows(g, c4_pair, 2);
        for (unsigned jobs : {2u, 4u, 7u}) {
            ArrowingOptions options;
            options.jobs = jobs;
            const auto parallel = arrows(g, c4_pair, 2, options);
            CHECK(parallel.arrows == sequential.arrows);
            CHECK(parallel.certificate == sequential.certificate);
        }
    }
}

TEST_CASE("budget exhaustion is reported") {
    ArrowingOptions options;
    options.budget = 10;
    CHECK_THROWS_AS(arrows(complete_bipartite(3, 7), c4_pair, 2, options), BudgetExceeded);
    options.jobs = 3;
    CHECK_THROWS_AS(arrows(complete_bipartite(3, 7), c4_pair, 2, options), BudgetExceeded);
    CHECK(arrows(complete_bipartite(3, 7), c4_pair, 2).nodes > 10);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(arrows(complete(3), c4_pair, 3), std::invalid_argument);
    CHECK_THROWS_AS(arrows(complete(3), {{0, 1}}, 1), std::invalid_argument);
    CHECK(arrows(complete(3), {{1, 1}}, 1).arrows);
    CHECK(arrows(SmallGraph(3, {}), {{1, 1}}, 1).certificate == std::string{});
}

TEST_CASE("min_t_arrowing") {
    CHECK(min_t_arrowing(3, c4_pair, 2, 8) == 7);
    // K_{1,2} can be split 1+1; K_{1,3} forces two edges of one colour at the centre.
    CHECK(min_t_arrowing(1, {{1, 2}, {1, 2}}, 2, 5) == 3);
    CHECK(oracle::first_avoiding_colouring(complete_bipartite(1, 2), {{1, 2}, {1, 2}}).has_value());
    CHECK_FALSE(oracle::first_avoiding_colouring(complete_bipartite(1, 3), {{1, 2}, {1, 2}}).has_value());
    CHECK(min_t_arrowing(2, {{1, 1}}, 1, 3) == 1);
    CHECK_FALSE(min_t_arrowing(3, c4_pair, 2, 6).has_value());
}
