#pragma once

#include <cstdint>

#include "fcpp/digraph.hpp"

namespace fcpp {

/// Layered extremal instance on n = 3k^2 + 2k + 2 vertices: quadratically
/// many forward couples under the canonical enumeration, but only
/// O(sqrt(n))-size balanced bi-trees among forward arcs.
struct Prop2Instance {
    int k = 0;
    Digraph graph;
    Ordering canonical;  // identity under the block numbering below
    int x = 0, y = 0;
    std::vector<int> A, Aprime, X, Bprime, B;  // block vertex ids, ascending

    // block layout: x, A (row-major by A_i), A', X (row-major), B', B, y
};

Prop2Instance gen_prop2(int k);

enum class MatchingMode { identity, hypercube, seeded_random };

/// Bi-oriented complete binary tree of height h (heap indexing: children of
/// v are 2v+1 and 2v+2) with one leaf matching per internal node.
struct RequestInstance {
    int height = 0;
    Digraph graph;
    std::vector<Arc> requests;  // unordered pairs stored with first < second
    std::vector<int> leaves;    // in-order, ascending ids
    // matchings[v] lists the leaf pairs contributed by internal node v
    std::vector<std::vector<Arc>> matchings;
};

RequestInstance gen_binary_tree_requests(int h, MatchingMode mode, std::uint64_t seed = 0);

/// Seeded random Hamiltonian circuit plus extra distinct arcs; strong by
/// construction.
Digraph gen_random_strong(int n, int extra_arcs, std::uint64_t seed);

Digraph gen_circuit(int n);

/// Each undirected edge {u,v} becomes the two arcs uv and vu.
Digraph gen_bioriented(int n, const std::vector<Arc>& edges);

}  // namespace fcpp
