#include <doctest.h>

#include <numeric>
#include <random>

#include "fcpp/bitree.hpp"
#include "fcpp/instances.hpp"
#include "fcpp/oracles.hpp"

using namespace fcpp;

TEST_CASE("spanning_structure of a circuit is the bare cycle") {
    Digraph c = gen_circuit(5);
    SpanningStructure s = spanning_structure(c, balanced_ico(c));
    CHECK(s.cycle.size() == 5);
    for (int v = 0; v < 5; ++v) {
        CHECK(s.in_next[v] == -1);
        CHECK(s.out_prev[v] == -1);
        CHECK(s.cycle_root[v] == v);
    }
}

TEST_CASE("transfer conserves total weight") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 5 + static_cast<int>(seed * 5) % 40;
        Digraph d = gen_random_strong(n, n, seed);
        IcoDecomposition dec = balanced_ico(d);
        SpanningStructure s = spanning_structure(d, dec);
        BiLabel labels;
        labels.i.resize(n);
        labels.o.resize(n);
        for (int v = 0; v < n; ++v) {
            labels.i[v] = (seed + v) % 4;
            labels.o[v] = (seed * 3 + v) % 4;
        }
        CycleLabels cl = transfer_to_cycle(s, labels);
        // I-side i-weight lands on the cycle, O-vertex i-weight is dropped
        long long want_i = 0, want_o = 0;
        for (int v : dec.I) want_i += labels.i[v];
        for (int v : dec.cycle) {
            want_i += labels.i[v];
            want_o += labels.o[v];
        }
        for (int v : dec.O) want_o += labels.o[v];
        CHECK(cl.weight_i() == want_i);
        CHECK(cl.weight_o() == want_o);
    }
}

TEST_CASE("transfer with unit labels counts forest sizes") {
    Digraph c = gen_circuit(4);
    SpanningStructure s = spanning_structure(c, balanced_ico(c));
    CycleLabels cl = transfer_to_cycle(s, BiLabel::unit(4));
    for (int i = 0; i < 4; ++i) {
        CHECK(cl.i[i] == 1);
        CHECK(cl.o[i] == 1);
    }
}

TEST_CASE("cycle_bitree: 4-cycle sharpness") {
    const long long q = 7;
    CycleLabels cl;
    cl.cycle = {0, 1, 2, 3};
    cl.i.assign(4, q);
    cl.o.assign(4, q);
    BiTree b = cycle_bitree(4, cl);
    CHECK(std::min(b.value.first, b.value.second) == 2 * q);  // exactly w/2
    auto [oa, ob] = best_cycle_bitree(cl);
    CHECK(std::min(oa, ob) == 2 * q);  // no split does better
}

TEST_CASE("cycle_bitree: 2-cycle with polarized labels") {
    CycleLabels cl;
    cl.cycle = {0, 1};
    cl.i = {9, 0};
    cl.o = {0, 9};
    BiTree b = cycle_bitree(2, cl);
    CHECK(b.value == std::pair<long long, long long>{9, 9});
}

TEST_CASE("cycle_bitree sandwich on random labelled cycles") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        int len = 1 + static_cast<int>(rng() % 12);
        CycleLabels cl;
        cl.cycle.resize(len);
        std::iota(cl.cycle.begin(), cl.cycle.end(), 0);
        cl.i.resize(len);
        cl.o.resize(len);
        for (int j = 0; j < len; ++j) {
            cl.i[j] = rng() % 9;
            cl.o[j] = rng() % 9;
        }
        BiTree b = cycle_bitree(len, cl);
        CHECK(2 * b.value.first >= cl.weight_i());
        CHECK(2 * b.value.second >= cl.weight_o());
        auto [oa, ob] = best_cycle_bitree(cl);
        CHECK(std::min(b.value.first, b.value.second) <= std::min(oa, ob));
        if (len >= 2) CHECK(verify_bitree(gen_circuit(len), b));
    }
}

TEST_CASE("unfold keeps value equal to side sizes under unit labels") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 6 + static_cast<int>(seed * 7) % 50;
        Digraph d = gen_random_strong(n, n / 2, seed);
        SpanningStructure s = spanning_structure(d, balanced_ico(d));
        CycleLabels cl = transfer_to_cycle(s, BiLabel::unit(n));
        BiTree folded = cycle_bitree(n, cl);
        BiTree b = unfold(s, folded);
        CHECK(b.value == folded.value);
        CHECK(b.minus_size() == b.value.first);
        CHECK(b.plus_size() == b.value.second);
        CHECK(verify_bitree(d, b));
    }
}

TEST_CASE("balanced_bitree guarantees n/6 per side") {
    BiTree b12 = balanced_bitree(gen_circuit(12));
    CHECK(b12.minus_size() >= 2);
    CHECK(b12.plus_size() >= 2);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 4 + static_cast<int>(seed * 9) % 150;
        Digraph d = gen_random_strong(n, static_cast<int>(seed % 3) * n, seed);
        BiTree b = balanced_bitree(d);
        CHECK(verify_bitree(d, b));
        CHECK(6 * std::min(b.minus_size(), b.plus_size()) >= n);
    }
    CHECK_THROWS_AS(balanced_bitree(build_digraph(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("balanced_bitree with 0/1 weights covers marked vertices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 10 + static_cast<int>(rng() % 80);
        Digraph d = gen_random_strong(n, n / 2, rng());
        std::vector<long long> w(n);
        long long marked = 0;
        for (int v = 0; v < n; ++v) {
            w[v] = rng() % 2;
            marked += w[v];
        }
        BiTree b = balanced_bitree(d, w);
        CHECK(verify_bitree(d, b));
        CHECK(6 * b.value.first >= marked);
        CHECK(6 * b.value.second >= marked);
    }
}

TEST_CASE("verify_bitree rejects malformed trees") {
    Digraph c = gen_circuit(4);
    BiTree b = balanced_bitree(c);
    REQUIRE(verify_bitree(c, b));

    BiTree shared = b;  // a non-center vertex on both sides
    for (int v = 0; v < 4; ++v)
        if (v != shared.center && shared.in_next[v] != -1 && shared.out_prev[v] == -1) {
            shared.out_prev[v] = shared.center;
            break;
        }
    CHECK_FALSE(verify_bitree(c, shared));

    BiTree offgraph;  // B- arc 2->0 is not a circuit arc
    offgraph.n = 4;
    offgraph.center = 0;
    offgraph.in_next = {-1, -1, 0, -1};
    offgraph.out_prev = {-1, 0, -1, -1};
    CHECK_FALSE(verify_bitree(c, offgraph));
}
