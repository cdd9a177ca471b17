#pragma once

#include "fcpp/left_dfs.hpp"

namespace fcpp {

/// Partition of V into I, C, O with C spanned by a directed cycle and no
/// arc from I to O. The cycle is stored in traversal order; closing_arc
/// is the arc from cycle.back() to cycle.front().
struct IcoDecomposition {
    std::vector<int> I, O;   // ascending
    std::vector<int> cycle;  // vertex sequence spanning C
    Arc closing_arc{-1, -1};

    int cycle_size() const { return static_cast<int>(cycle.size()); }
};

/// Handle (x, y) of a left subtree with n/3 < |T_{x,y}| < 2n/3 (strict,
/// integer arithmetic). Requires a left-maximal tree with n >= 4.
std::pair<int, int> balanced_left_subtree(const DfsTree& t);

/// Weighted variant: W/3 <= w(T_{x,y}) <= 2W/3 (non-strict). Requires a
/// weight-left-maximal tree and max vertex weight < W/3.
std::pair<int, int> weighted_left_subtree(const DfsTree& t, const std::vector<long long>& weights);

/// Decomposition with T_{x,y} inside I∪C and the rest inside O∪C: take the
/// arc (u,v) from T_{x,y}∖{x} hitting the left path closest to the root,
/// close the tree path v→u into the cycle C.
IcoDecomposition ico_from_left_subtree(const Digraph& d, const DfsTree& t, int x, int y);

/// Balanced decomposition: 3|I∪C| > n and 3|O∪C| > n. n <= 3 by direct
/// case analysis, n >= 4 through the left-maximal DFS pipeline.
IcoDecomposition balanced_ico(const Digraph& d);

CheckResult verify_ico(const Digraph& d, const IcoDecomposition& dec, bool check_balance = false);

}  // namespace fcpp
