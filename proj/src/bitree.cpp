#include "fcpp/bitree.hpp"

#include <algorithm>
#include <numeric>

namespace fcpp {

long long CycleLabels::weight_i() const { return std::accumulate(i.begin(), i.end(), 0LL); }
long long CycleLabels::weight_o() const { return std::accumulate(o.begin(), o.end(), 0LL); }

long long BiTree::minus_size() const {
    long long c = 1;
    for (int v = 0; v < n; ++v)
        if (v != center && in_next[v] != -1) ++c;
    return c;
}

long long BiTree::plus_size() const {
    long long c = 1;
    for (int v = 0; v < n; ++v)
        if (v != center && out_prev[v] != -1) ++c;
    return c;
}

SpanningStructure spanning_structure(const Digraph& d, const IcoDecomposition& dec) {
    if (auto check = verify_ico(d, dec); !check)
        throw std::invalid_argument("spanning_structure: invalid decomposition: " + check.reason);
    std::vector<int> role(d.n, 1);  // 0=I, 1=C, 2=O
    for (int v : dec.I) role[v] = 0;
    for (int v : dec.O) role[v] = 2;
    for (int v : dec.cycle) role[v] = 1;

    SpanningStructure s;
    s.cycle = dec.cycle;
    s.in_next.assign(d.n, -1);
    s.out_prev.assign(d.n, -1);
    s.cycle_root.assign(d.n, -1);

    // distance from each I-vertex to C along arcs inside I∪C
    std::vector<int> dist(d.n, -1);
    std::vector<int> queue;
    for (int v : dec.cycle) dist[v] = 0, queue.push_back(v);
    for (size_t h = 0; h < queue.size(); ++h) {
        int w = queue[h];
        for (int u : d.in_adj[w])
            if (role[u] == 0 && dist[u] == -1) dist[u] = dist[w] + 1, queue.push_back(u);
    }
    for (int u : dec.I) {
        int best = -1;
        for (int w : d.out_adj[u]) {
            if (role[w] == 2 || dist[w] == -1 || dist[w] >= dist[u]) continue;
            if (best == -1 || dist[w] < dist[best] || (dist[w] == dist[best] && w < best)) best = w;
        }
        if (best == -1) throw std::invalid_argument("spanning_structure: I-vertex cannot reach the cycle");
        s.in_next[u] = best;
    }

    // distance from C to each O-vertex along arcs inside C∪O
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    for (int v : dec.cycle) dist[v] = 0, queue.push_back(v);
    for (size_t h = 0; h < queue.size(); ++h) {
        int w = queue[h];
        for (int u : d.out_adj[w])
            if (role[u] == 2 && dist[u] == -1) dist[u] = dist[w] + 1, queue.push_back(u);
    }
    for (int u : dec.O) {
        int best = -1;
        for (int w : d.in_adj[u]) {
            if (role[w] == 0 || dist[w] == -1 || dist[w] >= dist[u]) continue;
            if (best == -1 || dist[w] < dist[best] || (dist[w] == dist[best] && w < best)) best = w;
        }
        if (best == -1) throw std::invalid_argument("spanning_structure: O-vertex unreachable from the cycle");
        s.out_prev[u] = best;
    }

    for (int v : dec.cycle) s.cycle_root[v] = v;
    for (int v = 0; v < d.n; ++v) {
        if (s.cycle_root[v] != -1) continue;
        int u = v;
        std::vector<int> chain;
        while (s.cycle_root[u] == -1) {
            chain.push_back(u);
            u = role[u] == 0 ? s.in_next[u] : s.out_prev[u];
        }
        for (int c : chain) s.cycle_root[c] = s.cycle_root[u];
    }
    return s;
}

CycleLabels transfer_to_cycle(const SpanningStructure& s, const BiLabel& labels) {
    int n = static_cast<int>(s.in_next.size());
    CycleLabels cl;
    cl.cycle = s.cycle;
    cl.i.assign(s.cycle.size(), 0);
    cl.o.assign(s.cycle.size(), 0);
    std::vector<int> pos(n, -1);
    for (size_t p = 0; p < s.cycle.size(); ++p) pos[s.cycle[p]] = static_cast<int>(p);
    for (int v = 0; v < n; ++v) {
        int root = s.cycle_root[v];
        if (root == -1) continue;
        if (v == root) {
            cl.i[pos[root]] += labels.i[v];
            cl.o[pos[root]] += labels.o[v];
        } else if (s.in_next[v] != -1) {
            cl.i[pos[root]] += labels.i[v];
        } else {
            cl.o[pos[root]] += labels.o[v];
        }
    }
    return cl;
}

BiTree cycle_bitree(int n, const CycleLabels& labels) {
    int len = static_cast<int>(labels.cycle.size());
    if (len == 0) throw std::invalid_argument("cycle_bitree: empty cycle");

    // rotate so that the cycle starts at its smallest vertex id
    int start = static_cast<int>(std::min_element(labels.cycle.begin(), labels.cycle.end()) -
                                 labels.cycle.begin());
    std::vector<int> cyc(len);
    std::vector<long long> iw(len), ow(len);
    for (int j = 0; j < len; ++j) {
        int src = (start + j) % len;
        cyc[j] = labels.cycle[src];
        iw[j] = labels.i[src];
        ow[j] = labels.o[src];
    }
    long long wi = std::accumulate(iw.begin(), iw.end(), 0LL);
    long long wo = std::accumulate(ow.begin(), ow.end(), 0LL);

    // shortest contiguous path reaching half of either weight
    int found_s = -1, found_len = -1;
    bool i_case = false;
    for (int plen = 1; plen <= len && found_s == -1; ++plen) {
        for (int s = 0; s < len; ++s) {
            long long si = 0, so = 0;
            for (int j = 0; j < plen; ++j) {
                si += iw[(s + j) % len];
                so += ow[(s + j) % len];
            }
            if (2 * si >= wi || 2 * so >= wo) {
                found_s = s;
                found_len = plen;
                i_case = 2 * si >= wi;
                break;
            }
        }
    }

    BiTree b;
    b.n = n;
    b.in_next.assign(n, -1);
    b.out_prev.assign(n, -1);
    int s = found_s, e = found_s + found_len - 1;  // path offsets [s, e]
    auto at = [&](int off) { return cyc[off % len]; };
    long long a = 0, bb = 0;
    if (i_case) {
        b.center = at(e);
        for (int t = s; t < e; ++t) b.in_next[at(t)] = at(t + 1);
        for (int t = e; t < s + len - 1; ++t) b.out_prev[at(t + 1)] = at(t);
        for (int t = s; t <= e; ++t) a += iw[t % len];
        for (int t = e; t <= s + len - 1; ++t) bb += ow[t % len];
    } else {
        b.center = at(s);
        for (int t = s; t < e; ++t) b.out_prev[at(t + 1)] = at(t);
        for (int t = e + 1; t < s + len; ++t) b.in_next[at(t)] = at(t + 1);
        for (int t = s; t <= e; ++t) bb += ow[t % len];
        a += iw[s % len];
        for (int t = e + 1; t <= s + len - 1; ++t) a += iw[t % len];
    }
    b.value = {a, bb};
    return b;
}

BiTree unfold(const SpanningStructure& s, const BiTree& cycle_tree) {
    int n = static_cast<int>(s.in_next.size());
    if (cycle_tree.n != n) throw std::invalid_argument("unfold: size mismatch");
    std::vector<char> on_cycle(n, 0);
    for (int v : s.cycle) on_cycle[v] = 1;
    if (!on_cycle[cycle_tree.center]) throw std::invalid_argument("unfold: bi-tree not over the cycle");
    BiTree b = cycle_tree;
    for (int v = 0; v < n; ++v) {
        if (on_cycle[v]) continue;
        int root = s.cycle_root[v];
        if (s.in_next[v] != -1 && cycle_tree.in_minus(root)) b.in_next[v] = s.in_next[v];
        if (s.out_prev[v] != -1 && cycle_tree.in_plus(root)) b.out_prev[v] = s.out_prev[v];
    }
    return b;
}

BiTree balanced_bitree(const Digraph& d, const std::vector<long long>& weights) {
    if (d.n == 0) throw std::invalid_argument("balanced_bitree: empty digraph");
    if (!is_strong(d)) throw PreconditionError("balanced_bitree: digraph is not strong");

    auto singleton = [&](int v, long long w) {
        BiTree b;
        b.n = d.n;
        b.center = v;
        b.in_next.assign(d.n, -1);
        b.out_prev.assign(d.n, -1);
        b.value = {w, w};
        return b;
    };

    if (weights.empty()) {
        IcoDecomposition dec = balanced_ico(d);
        SpanningStructure s = spanning_structure(d, dec);
        CycleLabels cl = transfer_to_cycle(s, BiLabel::unit(d.n));
        return unfold(s, cycle_bitree(d.n, cl));
    }

    if (static_cast<int>(weights.size()) != d.n)
        throw std::invalid_argument("balanced_bitree: weight vector size mismatch");
    for (long long w : weights)
        if (w < 0) throw std::invalid_argument("balanced_bitree: negative weight");
    long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
    if (total == 0) return singleton(0, 0);
    for (int v = 0; v < d.n; ++v)
        if (3 * weights[v] >= total) return singleton(v, weights[v]);

    DfsTree t = left_maximal_dfs(d, 0, weights);
    auto [x, y] = weighted_left_subtree(t, weights);
    IcoDecomposition dec = ico_from_left_subtree(d, t, x, y);
    SpanningStructure s = spanning_structure(d, dec);
    CycleLabels cl = transfer_to_cycle(s, BiLabel::from_weights(weights));
    return unfold(s, cycle_bitree(d.n, cl));
}

CheckResult verify_bitree(const Digraph& d, const BiTree& b) {
    if (b.n != d.n) return {false, "size mismatch"};
    if (b.center < 0 || b.center >= d.n) return {false, "center out of range"};
    if (b.in_next[b.center] != -1 || b.out_prev[b.center] != -1)
        return {false, "center has an outgoing tree link"};
    for (int v = 0; v < d.n; ++v) {
        if (v == b.center) continue;
        if (b.in_next[v] != -1 && b.out_prev[v] != -1)
            return {false, "non-center vertex shared by both sides"};
        if (b.in_next[v] != -1 && !d.has_arc(v, b.in_next[v]))
            return {false, "in-tree arc missing from digraph"};
        if (b.out_prev[v] != -1 && !d.has_arc(b.out_prev[v], v))
            return {false, "out-tree arc missing from digraph"};
    }
    for (int v = 0; v < d.n; ++v) {
        if (v == b.center) continue;
        if (b.in_next[v] != -1) {
            int u = v, steps = 0;
            while (u != b.center) {
                if (u == -1 || ++steps > d.n) return {false, "in-tree chain does not reach the center"};
                u = b.in_next[u];
            }
        }
        if (b.out_prev[v] != -1) {
            int u = v, steps = 0;
            while (u != b.center) {
                if (u == -1 || ++steps > d.n) return {false, "out-tree chain does not reach the center"};
                u = b.out_prev[u];
            }
        }
    }
    return {};
}

}  // namespace fcpp
