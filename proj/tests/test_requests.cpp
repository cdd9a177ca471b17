#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fcpp/oracles.hpp"
#include "fcpp/requests.hpp"

using namespace fcpp;

namespace {

Digraph random_bioriented_tree(int n, std::mt19937_64& rng) {
    std::vector<Arc> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
    return gen_bioriented(n, edges);
}

}  // namespace

TEST_CASE("count_satisfied_requests pair vs couple mode") {
    int n = 6;
    Digraph c = gen_circuit(n);
    std::vector<Arc> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
    CHECK(count_satisfied_requests(c, Ordering::identity(n), all_pairs) == n * (n - 1) / 2);

    // backward couples (v_{i+1}, v_i): as pairs the cyclic order takes all,
    // as couples no ordering can satisfy two of them
    std::vector<Arc> couples;
    for (int i = 0; i < n; ++i) couples.push_back({(i + 1) % n, i});
    CHECK(count_satisfied_requests(c, Ordering::identity(n), couples) == n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long best = 0;
    do {
        best = std::max(best, count_satisfied_requests(c, Ordering::from_perm(perm), couples, true));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(best == 1);
}

TEST_CASE("tree_orientation_stats conventions at h=2") {
    RequestInstance inst = gen_binary_tree_requests(2, MatchingMode::identity);
    // all edges oriented down: the root reaches every leaf, nothing goes up
    TreeOrientationStats down = tree_orientation_stats(inst, std::vector<char>(6, 1));
    CHECK(down.leaf_cnt[0] == 4);
    CHECK(down.out_cnt[0] == 4);
    CHECK(down.in_cnt[0] == 0);
    CHECK(down.satisfied == 0);
    for (int leaf : inst.leaves) {
        CHECK(down.in_cnt[leaf] == 1);
        CHECK(down.out_cnt[leaf] == 1);
        CHECK(down.leaf_cnt[leaf] == 1);
    }

    // left subtree up, right subtree down: both root matchings realized
    std::vector<char> mixed = {0, 1, 0, 0, 1, 1};  // edges to nodes 1..6
    TreeOrientationStats m = tree_orientation_stats(inst, mixed);
    CHECK(m.satisfied == 2);
    CHECK(m.rf[0] == 2);
    CHECK(m.in_cnt[0] + m.rf[0] <= m.leaf_cnt[0]);
    CHECK(m.out_cnt[0] + m.rf[0] <= m.leaf_cnt[0]);
}

TEST_CASE("max_requests_on_tree matches the 2^h bound") {
    for (int h : {1, 2, 3}) {
        RequestInstance inst = gen_binary_tree_requests(h, MatchingMode::identity);
        TreeRequestOptimum opt = max_requests_on_tree(inst);
        CHECK(opt.exact);
        CHECK(opt.max_satisfied <= (1 << h));
        // the witness realizes the reported count and obeys the per-node bounds
        TreeOrientationStats s = tree_orientation_stats(inst, opt.orientation);
        CHECK(s.satisfied == opt.max_satisfied);
        for (int v = 0; v < inst.graph.n; ++v) {
            CHECK(s.rf[v] + s.in_cnt[v] <= s.leaf_cnt[v]);
            CHECK(s.rf[v] + s.out_cnt[v] <= s.leaf_cnt[v]);
        }
    }

    TreeRequestOptimum h4 = max_requests_on_tree(gen_binary_tree_requests(4, MatchingMode::identity));
    CHECK_FALSE(h4.exact);
    CHECK(h4.max_satisfied == 16);

    CHECK_THROWS_AS(max_requests_on_tree(gen_binary_tree_requests(5, MatchingMode::identity)),
                    std::invalid_argument);
}

TEST_CASE("exhaustive tree optimum equals the best ordering count") {
    RequestInstance inst = gen_binary_tree_requests(2, MatchingMode::identity);
    TreeRequestOptimum opt = max_requests_on_tree(inst);
    int n = inst.graph.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long best = 0;
    do {
        best = std::max(best,
                        count_satisfied_requests(inst.graph, Ordering::from_perm(perm), inst.requests));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(best == opt.max_satisfied);
}

TEST_CASE("forward cover basics") {
    Digraph edge = gen_bioriented(2, {{0, 1}});
    auto cover = forward_cover_bioriented(edge);
    CHECK(cover.size() == 1);
    CHECK(verify_forward_cover(edge, cover));

    Digraph p4 = gen_bioriented(4, {{0, 1}, {1, 2}, {2, 3}});
    auto pcover = forward_cover_bioriented(p4);
    CHECK(pcover.size() <= 3);
    CHECK(verify_forward_cover(p4, pcover));

    // a bidirected star cannot be covered by one ordering
    Digraph star = gen_bioriented(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(verify_forward_cover(star, {Ordering::identity(4)}));
    CHECK_FALSE(verify_forward_cover(star, {}));
    CHECK(verify_forward_cover(star, forward_cover_bioriented(star)));

    CHECK_THROWS_AS(forward_cover_bioriented(build_digraph(2, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("forward cover is complete and logarithmic on random inputs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 200);
        Digraph g = random_bioriented_tree(n, rng);
        auto cover = forward_cover_bioriented(g);
        CHECK(verify_forward_cover(g, cover));
        // bound = ceil(log_{3/2} n) + 2, in integers
        int bound = 2;
        for (long long p3 = 1, p2 = 1; p3 < static_cast<long long>(n) * p2; p3 *= 3, p2 *= 2) ++bound;
        CHECK(static_cast<int>(cover.size()) <= bound);
    }
}
