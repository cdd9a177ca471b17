#include <doctest.h>

#include <algorithm>
#include <set>

#include "fcpp/instances.hpp"
#include "fcpp/ordering.hpp"

using namespace fcpp;

TEST_CASE("gen_prop2 structure") {
    for (int k = 1; k <= 3; ++k) {
        Prop2Instance inst = gen_prop2(k);
        CHECK(inst.graph.n == 3 * k * k + 2 * k + 2);
        CHECK(inst.graph.arc_count() == 6 * k * k + 1);
        CHECK(is_strong(inst.graph));
        CHECK(inst.canonical.perm == Ordering::identity(inst.graph.n).perm);

        // minimally strong: no arc can be deleted
        CHECK(minimalize_strong(inst.graph).arcs == inst.graph.arcs);
        // every arc has tail out-degree 1 or head in-degree 1
        for (auto [u, v] : inst.graph.arcs) {
            bool ok = inst.graph.out_adj[u].size() == 1 || inst.graph.in_adj[v].size() == 1;
            CHECK(ok);
        }
        // the canonical enumeration makes every arc but yx forward
        Digraph fwd = forward_dag(inst.graph, inst.canonical);
        CHECK(fwd.arc_count() == inst.graph.arc_count() - 1);
        CHECK_FALSE(fwd.has_arc(inst.y, inst.x));
        CHECK(count_forward_pairs(inst.graph, inst.canonical) >=
              static_cast<long long>(k) * k * k * k);
    }
    CHECK_THROWS_AS(gen_prop2(0), std::invalid_argument);
}

TEST_CASE("gen_binary_tree_requests sizes and matchings") {
    for (int h : {1, 2, 3}) {
        for (MatchingMode mode :
             {MatchingMode::identity, MatchingMode::hypercube, MatchingMode::seeded_random}) {
            RequestInstance inst = gen_binary_tree_requests(h, mode, 42);
            CHECK(inst.graph.n == (1 << (h + 1)) - 1);
            CHECK(static_cast<int>(inst.requests.size()) == h * (1 << (h - 1)));
            CHECK(static_cast<int>(inst.leaves.size()) == (1 << h));
            CHECK(is_strong(inst.graph));
            // each request's lowest common ancestor is its owning node
            for (int v = 0; v < inst.graph.n; ++v) {
                for (auto [a, b] : inst.matchings[v]) {
                    int x = a, y = b;
                    while (x != y) (x > y ? x : y) = ((x > y ? x : y) - 1) / 2;
                    CHECK(x == v);
                }
            }
        }
    }
    CHECK_THROWS_AS(gen_binary_tree_requests(0, MatchingMode::identity), std::invalid_argument);
}

TEST_CASE("hypercube matching at h=3 is 3-regular on the leaves") {
    RequestInstance inst = gen_binary_tree_requests(3, MatchingMode::hypercube);
    std::vector<int> deg(inst.graph.n, 0);
    std::set<Arc> dedup(inst.requests.begin(), inst.requests.end());
    CHECK(dedup.size() == inst.requests.size());
    for (auto [a, b] : inst.requests) {
        ++deg[a];
        ++deg[b];
    }
    for (int leaf : inst.leaves) CHECK(deg[leaf] == 3);
}

TEST_CASE("seeded_random matchings are deterministic per seed") {
    auto a = gen_binary_tree_requests(3, MatchingMode::seeded_random, 5);
    auto b = gen_binary_tree_requests(3, MatchingMode::seeded_random, 5);
    CHECK(a.requests == b.requests);
}

TEST_CASE("gen_random_strong") {
    Digraph circuitish = gen_random_strong(7, 0, 3);
    CHECK(circuitish.arc_count() == 7);
    CHECK(is_strong(circuitish));

    Digraph a = gen_random_strong(20, 35, 9);
    Digraph b = gen_random_strong(20, 35, 9);
    CHECK(a.arcs == b.arcs);
    CHECK(a.arc_count() == 55);
    CHECK(is_strong(a));

    CHECK_THROWS_AS(gen_random_strong(3, 100, 0), std::invalid_argument);
}

TEST_CASE("gen_circuit and gen_bioriented") {
    Digraph c = gen_circuit(4);
    CHECK(c.arcs == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});

    Digraph edge = gen_bioriented(2, {{0, 1}});
    CHECK(edge.arc_count() == 2);
    CHECK(edge.has_arc(0, 1));
    CHECK(edge.has_arc(1, 0));

    Digraph star = gen_bioriented(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.arc_count() == 6);
    CHECK(is_strong(star));

    CHECK_THROWS_AS(gen_bioriented(4, {{0, 1}, {2, 3}}), std::invalid_argument);
}
