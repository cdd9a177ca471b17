#include "fcpp/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace fcpp {

Ordering ordering_from_bitree(const Digraph& d, const BiTree& b) {
    if (auto check = verify_bitree(d, b); !check)
        throw std::invalid_argument("ordering_from_bitree: invalid bi-tree: " + check.reason);
    int n = d.n;
    std::vector<int> perm;
    perm.reserve(n);

    // children lists of both sides, ascending ids
    std::vector<std::vector<int>> minus_children(n), plus_children(n);
    for (int v = 0; v < n; ++v) {
        if (v != b.center && b.in_next[v] != -1) minus_children[b.in_next[v]].push_back(v);
        if (v != b.center && b.out_prev[v] != -1) plus_children[b.out_prev[v]].push_back(v);
    }

    // B⁻∖{r}: post-order, so each vertex precedes the vertex it points to
    {
        std::vector<std::pair<int, size_t>> st{{b.center, 0}};
        std::vector<int> post;
        while (!st.empty()) {
            auto& [v, next] = st.back();
            if (next < minus_children[v].size()) {
                st.push_back({minus_children[v][next++], 0});
            } else {
                post.push_back(v);
                st.pop_back();
            }
        }
        // post-order of the reversed in-tree lists parents AFTER children
        // except it ends with the center; drop the center here.
        for (int v : post)
            if (v != b.center) perm.push_back(v);
    }
    perm.push_back(b.center);
    // B⁺∖{r}: pre-order, so each vertex follows its parent
    {
        std::vector<int> st{b.center};
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            if (v != b.center) perm.push_back(v);
            for (auto it = plus_children[v].rbegin(); it != plus_children[v].rend(); ++it) st.push_back(*it);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!b.in_minus(v) && !b.in_plus(v)) perm.push_back(v);
    return Ordering::from_perm(std::move(perm));
}

long long count_forward_pairs(const Digraph& d, const Ordering& ord) {
    return reach_pair_count(forward_dag(d, ord));
}

Schedule schedule_from_ordering(const Digraph& d, const Ordering& ord) {
    if (ord.n() != d.n) throw std::invalid_argument("schedule_from_ordering: ordering size mismatch");
    Schedule s;
    s.label.reserve(d.arcs.size());
    for (auto [u, v] : d.arcs)
        s.label.push_back(static_cast<long long>(d.n) * ord.pos[u] + ord.pos[v] + 1);
    return s;
}

long long count_temporal_pairs(const Digraph& d, const Schedule& sched) {
    if (sched.label.size() != d.arcs.size())
        throw std::invalid_argument("count_temporal_pairs: schedule size mismatch");
    std::vector<int> order(d.arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sched.label[a] < sched.label[b]; });
    for (size_t i = 1; i < order.size(); ++i)
        if (sched.label[order[i - 1]] == sched.label[order[i]])
            throw std::invalid_argument("count_temporal_pairs: duplicate label");

    // temporal ancestors per vertex, arcs processed in ascending label order
    BitMatrix anc(d.n, d.n);
    for (int idx : order) {
        auto [x, y] = d.arcs[idx];
        anc.or_row(y, x);
        anc.set(y, x);
    }
    long long total = 0;
    for (int v = 0; v < d.n; ++v) {
        total += anc.count_row(v);
        if (anc.test(v, v)) --total;
    }
    return total;
}

FcppResult fcpp_approx(const Digraph& d) {
    FcppResult r;
    r.bitree = balanced_bitree(d);
    r.ordering = ordering_from_bitree(d, r.bitree);
    r.forward_pairs = count_forward_pairs(d, r.ordering);
    return r;
}

}  // namespace fcpp
