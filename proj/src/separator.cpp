#include "fcpp/separator.hpp"

#include <algorithm>
#include <numeric>

namespace fcpp {

std::pair<int, int> balanced_left_subtree(const DfsTree& t) {
    int n = t.n();
    if (n < 4) throw PreconditionError("balanced_left_subtree: need n >= 4");
    auto lp = left_path(t);
    int z = -1, x = -1;
    for (size_t i = 1; i < lp.size(); ++i) {
        if (3LL * t.subtree_size[lp[i]] <= n) {
            z = lp[i];
            x = lp[i - 1];
            break;
        }
    }
    if (z == -1) throw PreconditionError("balanced_left_subtree: malformed tree");
    if (3LL * t.subtree_size[z] == n) return {x, z};
    // rightmost child y of x with |T_{x,y}| < 2n/3
    long long prefix = 1;
    int y = -1;
    for (int c : t.children[x]) {
        prefix += t.subtree_size[c];
        if (3 * prefix < 2LL * n) y = c;
        else break;
    }
    if (y == -1) throw PreconditionError("balanced_left_subtree: no qualifying child");
    return {x, y};
}

std::pair<int, int> weighted_left_subtree(const DfsTree& t, const std::vector<long long>& weights) {
    int n = t.n();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weighted_left_subtree: weight vector size mismatch");
    long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
    for (long long w : weights)
        if (3 * w >= total)
            throw PreconditionError("weighted_left_subtree: a vertex carries a third of the weight");
    // subtree weights bottom-up
    std::vector<int> order;
    std::vector<int> st{t.root};
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        order.push_back(v);
        for (int c : t.children[v]) st.push_back(c);
    }
    std::vector<long long> sub(weights);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : t.children[*it]) sub[*it] += sub[c];

    auto lp = left_path(t);
    int z = -1, x = -1;
    for (size_t i = 1; i < lp.size(); ++i) {
        if (3 * sub[lp[i]] <= total) {
            z = lp[i];
            x = lp[i - 1];
            break;
        }
    }
    if (z == -1) throw PreconditionError("weighted_left_subtree: malformed tree");
    // first prefix reaching W/3; stays <= 2W/3 because each increment is <= W/3
    long long prefix = weights[x];
    for (int c : t.children[x]) {
        prefix += sub[c];
        if (3 * prefix >= total) return {x, c};
    }
    throw PreconditionError("weighted_left_subtree: no qualifying child");
}

IcoDecomposition ico_from_left_subtree(const Digraph& d, const DfsTree& t, int x, int y) {
    auto txy = left_subtree(t, x, y);  // validates x on left path, y child of x
    std::vector<char> in_txy(d.n, 0);
    for (int v : txy) in_txy[v] = 1;
    auto lp = left_path(t);
    std::vector<int> lp_depth(d.n, -1);
    int ix = -1;
    for (size_t i = 0; i < lp.size(); ++i) {
        lp_depth[lp[i]] = static_cast<int>(i);
        if (lp[i] == x) ix = static_cast<int>(i);
    }
    int best_u = -1, best_v = -1;
    for (auto [u, v] : d.arcs) {
        if (!in_txy[u] || u == x) continue;
        if (lp_depth[v] < 0 || lp_depth[v] > ix) continue;
        if (best_v == -1 || lp_depth[v] < lp_depth[best_v] ||
            (lp_depth[v] == lp_depth[best_v] && u < best_u)) {
            best_u = u;
            best_v = v;
        }
    }
    if (best_u == -1)
        throw PreconditionError("ico_from_left_subtree: no arc back to the left path (input not strong?)");

    // cycle = tree path best_v -> best_u, closed by the chosen arc
    std::vector<int> path;
    for (int w = best_u; w != best_v; w = t.parent[w]) {
        if (w < 0) throw PreconditionError("ico_from_left_subtree: arc target not an ancestor");
        path.push_back(w);
    }
    path.push_back(best_v);
    std::reverse(path.begin(), path.end());

    IcoDecomposition dec;
    dec.cycle = path;
    dec.closing_arc = {best_u, best_v};
    std::vector<char> in_c(d.n, 0);
    for (int v : path) in_c[v] = 1;
    for (int v = 0; v < d.n; ++v) {
        if (in_c[v]) continue;
        if (in_txy[v]) dec.I.push_back(v);
        else dec.O.push_back(v);
    }
    return dec;
}

namespace {

// shortest directed cycle through vertex 0 (n <= 3 small cases)
std::vector<int> shortest_cycle_through_zero(const Digraph& d) {
    std::vector<int> dist(d.n, -1), prev(d.n, -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : d.out_adj[v]) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    int best = -1;
    for (int w : d.in_adj[0])
        if (dist[w] >= 0 && (best == -1 || dist[w] < dist[best] || (dist[w] == dist[best] && w < best)))
            best = w;
    if (best == -1) throw PreconditionError("balanced_ico: no cycle through vertex 0");
    std::vector<int> cyc;
    for (int v = best; v != -1; v = prev[v]) cyc.push_back(v);
    std::reverse(cyc.begin(), cyc.end());
    return cyc;
}

}  // namespace

IcoDecomposition balanced_ico(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("balanced_ico: digraph is not strong");
    if (d.n == 1) {
        IcoDecomposition dec;
        dec.cycle = {0};
        return dec;
    }
    if (d.n <= 3) {
        IcoDecomposition dec;
        dec.cycle = shortest_cycle_through_zero(d);
        dec.closing_arc = {dec.cycle.back(), dec.cycle.front()};
        std::vector<char> in_c(d.n, 0);
        for (int v : dec.cycle) in_c[v] = 1;
        // leftover vertices have all their out-arcs into C, so I is safe
        for (int v = 0; v < d.n; ++v)
            if (!in_c[v]) dec.I.push_back(v);
        return dec;
    }
    DfsTree t = left_maximal_dfs(d, 0);
    auto [x, y] = balanced_left_subtree(t);
    return ico_from_left_subtree(d, t, x, y);
}

CheckResult verify_ico(const Digraph& d, const IcoDecomposition& dec, bool check_balance) {
    std::vector<int> role(d.n, -1);  // 0=I, 1=C, 2=O
    auto assign = [&](const std::vector<int>& set, int r) {
        for (int v : set) {
            if (v < 0 || v >= d.n || role[v] != -1) return false;
            role[v] = r;
        }
        return true;
    };
    if (!assign(dec.I, 0) || !assign(dec.cycle, 1) || !assign(dec.O, 2))
        return {false, "I, C, O are not disjoint subsets of V"};
    for (int v = 0; v < d.n; ++v)
        if (role[v] == -1) return {false, "I, C, O do not cover V"};
    int len = dec.cycle_size();
    if (len == 0) return {false, "empty cycle"};
    if (len == 1) {
        if (d.n != 1) return {false, "single-vertex cycle in a non-trivial digraph"};
    } else {
        for (int i = 0; i + 1 < len; ++i)
            if (!d.has_arc(dec.cycle[i], dec.cycle[i + 1])) return {false, "missing cycle arc"};
        if (dec.closing_arc != Arc{dec.cycle.back(), dec.cycle.front()})
            return {false, "closing arc does not close the cycle"};
        if (!d.has_arc(dec.closing_arc.first, dec.closing_arc.second))
            return {false, "closing arc missing from digraph"};
    }
    for (auto [u, v] : d.arcs)
        if (role[u] == 0 && role[v] == 2) return {false, "arc from I to O"};
    if (check_balance) {
        long long ic = static_cast<long long>(dec.I.size()) + len;
        long long oc = static_cast<long long>(dec.O.size()) + len;
        if (3 * ic <= d.n || 3 * oc <= d.n) return {false, "decomposition not balanced"};
    }
    return {};
}

}  // namespace fcpp
