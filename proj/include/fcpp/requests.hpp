#pragma once

#include "fcpp/instances.hpp"
#include "fcpp/ordering.hpp"

namespace fcpp {

/// Number of requests forward-connected under ord. Pair mode accepts
/// either direction; couple mode requires first -> second.
long long count_satisfied_requests(const Digraph& d, const Ordering& ord,
                                   const std::vector<Arc>& requests, bool couple_mode = false);

/// Per-node statistics of one tree-edge orientation:
///   rf   — realized requests between descendants,
///   in   — descendant leaves with an all-up path to the node,
///   out  — descendant leaves with an all-down path from the node,
///   leaf — descendant leaf count (a leaf counts itself; in/out of a leaf are 1).
struct TreeOrientationStats {
    long long satisfied = 0;
    std::vector<long long> rf, in_cnt, out_cnt, leaf_cnt;
};

/// orientation[v-1] == 1 means the tree edge to node v points down
/// (parent -> child); 0 means up.
TreeOrientationStats tree_orientation_stats(const RequestInstance& inst,
                                            const std::vector<char>& orientation);

struct TreeRequestOptimum {
    long long max_satisfied = 0;
    bool exact = false;                // exhaustive for h <= 3, certified bound for h == 4
    std::vector<char> orientation;     // witness when exact
};

/// Exact maximum of satisfied requests over all orderings (equivalently,
/// all tree-edge orientations) for h <= 3; the certified 2^h upper bound
/// for h == 4; error beyond.
TreeRequestOptimum max_requests_on_tree(const RequestInstance& inst);

/// Recursive centroid construction: O(log n) orderings such that every
/// vertex pair is forward in at least one of them. Input must be a
/// bi-orientation of a connected graph.
std::vector<Ordering> forward_cover_bioriented(const Digraph& g);

CheckResult verify_forward_cover(const Digraph& d, const std::vector<Ordering>& orderings);

}  // namespace fcpp
