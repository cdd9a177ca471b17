#pragma once

#include "fcpp/separator.hpp"

namespace fcpp {

/// Per-vertex (i, o) labels.
struct BiLabel {
    std::vector<long long> i, o;

    static BiLabel unit(int n) { return {std::vector<long long>(n, 1), std::vector<long long>(n, 1)}; }
    static BiLabel from_weights(const std::vector<long long>& w) { return {w, w}; }
};

/// Cycle of an (I,C,O)-decomposition plus per-vertex next hops: every
/// I-vertex routes to C through a chosen out-neighbor, every O-vertex is
/// fed from C through a chosen in-neighbor.
struct SpanningStructure {
    std::vector<int> cycle;
    std::vector<int> in_next;    // I-vertex -> out-neighbor toward C, -1 elsewhere
    std::vector<int> out_prev;   // O-vertex -> in-neighbor toward C, -1 elsewhere
    std::vector<int> cycle_root; // vertex -> the cycle vertex its chain reaches
};

/// Labels carried by a cycle, parallel to the vertex sequence.
struct CycleLabels {
    std::vector<int> cycle;
    std::vector<long long> i, o;

    long long weight_i() const;
    long long weight_o() const;
};

/// In-tree B⁻ and out-tree B⁺ sharing exactly their center.
struct BiTree {
    int n = 0;
    int center = -1;
    std::vector<int> in_next;   // v in B⁻∖{center} -> next vertex toward center
    std::vector<int> out_prev;  // v in B⁺∖{center} -> previous vertex from center
    std::pair<long long, long long> value{0, 0};

    bool in_minus(int v) const { return v == center || in_next[v] != -1; }
    bool in_plus(int v) const { return v == center || out_prev[v] != -1; }
    long long minus_size() const;
    long long plus_size() const;
};

SpanningStructure spanning_structure(const Digraph& d, const IcoDecomposition& dec);

/// Accumulate i-labels of the in-forests and o-labels of the out-forests
/// onto their cycle roots.
CycleLabels transfer_to_cycle(const SpanningStructure& s, const BiLabel& labels);

/// Bi-tree on a labelled cycle with value (a,b), 2a >= weight_i and
/// 2b >= weight_o: shortest cycle path reaching half of either weight,
/// complement on the other side.
BiTree cycle_bitree(int n, const CycleLabels& labels);

/// Reattach the in-forests below B⁻ cycle vertices and the out-forests
/// below B⁺ cycle vertices; the value is unchanged.
BiTree unfold(const SpanningStructure& s, const BiTree& cycle_tree);

/// Full pipeline. Unit weights: both sides have size >= n/6. Explicit
/// weights with total W: both sides have total weight >= W/6.
BiTree balanced_bitree(const Digraph& d, const std::vector<long long>& weights = {});

CheckResult verify_bitree(const Digraph& d, const BiTree& b);

}  // namespace fcpp
