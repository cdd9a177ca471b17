#pragma once

#include "fcpp/bitree.hpp"

namespace fcpp {

/// Enumeration listing B⁻∖{r} leaves-first, then r, then B⁺∖{r}
/// parents-first, then the remaining vertices in ascending id.
/// Every (x,y) in B⁻ x B⁺ becomes a forward couple.
Ordering ordering_from_bitree(const Digraph& d, const BiTree& b);

/// Number of ordered pairs joined by a directed path of forward arcs.
long long count_forward_pairs(const Digraph& d, const Ordering& ord);

/// f(xy) = n*g(x) + g(y) + 1 — injective, and every forward couple of
/// (d, ord) is temporally connected under it.
Schedule schedule_from_ordering(const Digraph& d, const Ordering& ord);

/// Number of ordered pairs (x,y), x != y, joined by a path with strictly
/// increasing labels.
long long count_temporal_pairs(const Digraph& d, const Schedule& sched);

struct FcppResult {
    Ordering ordering;
    long long forward_pairs = 0;
    BiTree bitree;
};

/// Bi-tree pipeline plus topological enumeration; forward pair count is
/// at least ceil(n/6)^2 - 1.
FcppResult fcpp_approx(const Digraph& d);

}  // namespace fcpp
