#pragma once

#include "fcpp/bitree.hpp"
#include "fcpp/ordering.hpp"

namespace fcpp {

struct BruteForceT {
    long long t = 0;
    Ordering best;
};

/// Exhaustive maximum of count_forward_pairs over all n! orderings (n <= 8).
BruteForceT brute_force_t(const Digraph& d);

/// Maximum bi-tree size in a DAG: max over centers of
/// 2 * min(#ancestors, #descendants) + 1.
long long dag_balanced_bitree_max(const Digraph& d);

/// Exhaustive optimum over all (center, split) bi-trees on a labelled
/// cycle (length <= 12), maximizing the min value component.
std::pair<long long, long long> best_cycle_bitree(const CycleLabels& labels);

}  // namespace fcpp
