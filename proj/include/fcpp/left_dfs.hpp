#pragma once

#include "fcpp/digraph.hpp"

namespace fcpp {

/// Spanning out-tree with ordered children. Children are stored
/// left-to-right; dfs_index is the preorder visit number of the
/// left-to-right traversal.
struct DfsTree {
    int root = 0;
    std::vector<int> parent;                  // -1 for the root
    std::vector<std::vector<int>> children;   // left-to-right order
    std::vector<int> subtree_size;
    std::vector<int> dfs_index;

    int n() const { return static_cast<int>(parent.size()); }
};

struct CheckResult {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// DFS tree rooted at `root` whose child subtree sizes are non-increasing
/// left-to-right. With weights given, subtree *weights* are non-increasing
/// instead and child selection maximizes out-section weight.
///
/// Construction: compute SCCs of the current subgraph minus the root,
/// accumulate out-section sizes over the condensation, pick an out-neighbor
/// of the root in a maximum-out-section source component, recurse on that
/// out-section and on the rest. Ties break on the component with smallest
/// minimum vertex id, then the smallest-id out-neighbor.
DfsTree left_maximal_dfs(const Digraph& d, int root,
                         const std::vector<long long>& weights = {});

/// True iff t is a spanning out-tree of d-arcs and every arc between
/// disjoint subtrees goes right to left.
CheckResult verify_dfs_tree(const Digraph& d, const DfsTree& t);

/// True iff every child list has non-increasing subtree sizes
/// (subtree weights when weights are given).
CheckResult verify_left_maximal(const DfsTree& t, const std::vector<long long>& weights = {});

/// Maximal leftmost-child chain starting at the root.
std::vector<int> left_path(const DfsTree& t);

/// {x} together with the subtrees of all children of x up to y
/// in left-right order. x must lie on the left path, y must be a child of x.
std::vector<int> left_subtree(const DfsTree& t, int x, int y);

}  // namespace fcpp
