#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fcpp/instances.hpp"
#include "fcpp/ordering.hpp"

using namespace fcpp;

TEST_CASE("ordering_from_bitree places B- before the center before B+") {
    Digraph c3 = gen_circuit(3);
    BiTree b;
    b.n = 3;
    b.center = 1;
    b.in_next = {1, -1, -1};   // 0 -> 1
    b.out_prev = {-1, -1, 1};  // 1 -> 2
    b.value = {2, 2};
    Ordering ord = ordering_from_bitree(c3, b);
    CHECK(ord.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("count_forward_pairs on circuits") {
    Digraph c = gen_circuit(8);
    CHECK(count_forward_pairs(c, Ordering::identity(8)) == 28);  // n(n-1)/2
    std::vector<int> rev(8);
    std::iota(rev.begin(), rev.end(), 0);
    std::reverse(rev.begin(), rev.end());
    // only the closing arc (7,0) survives the reversed order
    CHECK(count_forward_pairs(c, Ordering::from_perm(rev)) == 1);
}

TEST_CASE("schedule_from_ordering formula and injectivity") {
    Digraph two = build_digraph(2, {{0, 1}, {1, 0}});
    Schedule s = schedule_from_ordering(two, Ordering::identity(2));
    CHECK(s.label[two.arc_index(0, 1)] == 2);  // n*g(x) + g(y) + 1
    CHECK(s.label[two.arc_index(1, 0)] == 3);

    Digraph d = gen_random_strong(15, 40, 5);
    Schedule sd = schedule_from_ordering(d, Ordering::identity(15));
    auto sorted = sd.label;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(sorted.front() >= 1);
}

TEST_CASE("count_temporal_pairs") {
    Digraph single = build_digraph(2, {{0, 1}});
    CHECK(count_temporal_pairs(single, Schedule{{1}}) == 1);

    Digraph path = build_digraph(3, {{0, 1}, {1, 2}});
    Schedule decreasing{{2, 1}};  // labels block the composed path
    CHECK(count_temporal_pairs(path, decreasing) == 2);
    Schedule increasing{{1, 2}};
    CHECK(count_temporal_pairs(path, increasing) == 3);

    CHECK_THROWS_AS(count_temporal_pairs(path, Schedule{{1, 1}}), std::invalid_argument);
}

TEST_CASE("schedules preserve forward connectivity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 40);
        Digraph d = gen_random_strong(n, static_cast<int>(rng() % (2 * n)), rng());
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Ordering ord = Ordering::from_perm(perm);
        long long fwd = count_forward_pairs(d, ord);
        long long tmp = count_temporal_pairs(d, schedule_from_ordering(d, ord));
        CHECK(tmp >= fwd);
        CHECK(fwd <= static_cast<long long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("fcpp_approx on a circuit is optimal") {
    FcppResult r = fcpp_approx(gen_circuit(6));
    CHECK(r.forward_pairs == 15);
}

TEST_CASE("fcpp_approx meets the ceil(n/6)^2 - 1 bound") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 4 + static_cast<int>(seed * 13) % 150;
        Digraph d = gen_random_strong(n, static_cast<int>(seed % 3) * n, seed);
        FcppResult r = fcpp_approx(d);
        long long sixth = (n + 5) / 6;
        CHECK(r.forward_pairs >= sixth * sixth - 1);
        // the ordering extends a topological order of the bi-tree
        Digraph fwd = forward_dag(d, r.ordering);
        for (int v = 0; v < n; ++v) {
            if (v != r.bitree.center && r.bitree.in_next[v] != -1)
                CHECK(fwd.has_arc(v, r.bitree.in_next[v]));
            if (v != r.bitree.center && r.bitree.out_prev[v] != -1)
                CHECK(fwd.has_arc(r.bitree.out_prev[v], v));
        }
        CHECK(r.forward_pairs >= r.bitree.minus_size() * r.bitree.plus_size() - 1);
    }
}
