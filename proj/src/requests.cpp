#include "fcpp/requests.hpp"

#include <algorithm>
#include <bit>

namespace fcpp {

long long count_satisfied_requests(const Digraph& d, const Ordering& ord,
                                   const std::vector<Arc>& requests, bool couple_mode) {
    for (auto [u, v] : requests)
        if (u < 0 || u >= d.n || v < 0 || v >= d.n)
            throw std::invalid_argument("count_satisfied_requests: request vertex out of range");
    BitMatrix rows = reach_rows(forward_dag(d, ord));
    long long satisfied = 0;
    for (auto [u, v] : requests) {
        if (u == v) continue;
        bool fwd = rows.test(u, v);
        bool bwd = rows.test(v, u);
        if (couple_mode ? fwd : (fwd || bwd)) ++satisfied;
    }
    return satisfied;
}

TreeOrientationStats tree_orientation_stats(const RequestInstance& inst,
                                            const std::vector<char>& orientation) {
    int n_nodes = inst.graph.n;
    if (static_cast<int>(orientation.size()) != n_nodes - 1)
        throw std::invalid_argument("tree_orientation_stats: orientation size mismatch");
    int h = inst.height;
    int first_leaf = (1 << h) - 1;
    TreeOrientationStats st;
    st.rf.assign(n_nodes, 0);
    st.in_cnt.assign(n_nodes, 0);
    st.out_cnt.assign(n_nodes, 0);
    st.leaf_cnt.assign(n_nodes, 0);
    std::vector<std::uint32_t> in_mask(n_nodes, 0), out_mask(n_nodes, 0);
    for (int v = n_nodes - 1; v >= 0; --v) {
        if (v >= first_leaf) {
            in_mask[v] = out_mask[v] = std::uint32_t{1} << (v - first_leaf);
            st.in_cnt[v] = st.out_cnt[v] = st.leaf_cnt[v] = 1;
            continue;
        }
        int y = 2 * v + 1, z = 2 * v + 2;
        bool y_down = orientation[y - 1], z_down = orientation[z - 1];
        in_mask[v] = (y_down ? 0 : in_mask[y]) | (z_down ? 0 : in_mask[z]);
        out_mask[v] = (y_down ? out_mask[y] : 0) | (z_down ? out_mask[z] : 0);
        st.in_cnt[v] = std::popcount(in_mask[v]);
        st.out_cnt[v] = std::popcount(out_mask[v]);
        st.leaf_cnt[v] = st.leaf_cnt[y] + st.leaf_cnt[z];
        st.rf[v] = st.rf[y] + st.rf[z];
        for (auto [a, b] : inst.matchings[v]) {
            std::uint32_t abit = std::uint32_t{1} << (a - first_leaf);
            std::uint32_t bbit = std::uint32_t{1} << (b - first_leaf);
            bool a_to_b = (in_mask[v] & abit) && (out_mask[v] & bbit);
            bool b_to_a = (in_mask[v] & bbit) && (out_mask[v] & abit);
            if (a_to_b || b_to_a) ++st.rf[v];
        }
    }
    st.satisfied = st.rf[0];
    return st;
}

TreeRequestOptimum max_requests_on_tree(const RequestInstance& inst) {
    int h = inst.height;
    if (h > 4) throw std::invalid_argument("max_requests_on_tree: enumeration infeasible beyond h = 4");
    TreeRequestOptimum opt;
    if (h == 4) {
        // 2^30 orientations: return the certified bound instead
        opt.max_satisfied = 1 << h;
        opt.exact = false;
        return opt;
    }
    int edges = inst.graph.n - 1;
    std::vector<char> orientation(edges, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edges); ++mask) {
        for (int e = 0; e < edges; ++e) orientation[e] = (mask >> e) & 1;
        TreeOrientationStats st = tree_orientation_stats(inst, orientation);
        if (st.satisfied > opt.max_satisfied || mask == 0) {
            opt.max_satisfied = st.satisfied;
            opt.orientation = orientation;
        }
    }
    opt.exact = true;
    return opt;
}

namespace {

struct CoverBuilder {
    const std::vector<std::vector<int>>& tree;  // undirected adjacency of the spanning tree

    // reverse pre-order of `set` rooted at c, excluding c (each vertex before its parent)
    std::vector<int> toward_root(const std::vector<int>& set, int c) const {
        std::vector<int> order = from_root(set, c);
        std::reverse(order.begin(), order.end());
        return order;
    }

    // pre-order of `set` rooted at c, excluding c (each vertex after its parent)
    std::vector<int> from_root(const std::vector<int>& set, int c) const {
        std::vector<char> in(tree.size(), 0), seen(tree.size(), 0);
        for (int v : set) in[v] = 1;
        std::vector<int> order, st{c};
        seen[c] = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            if (v != c) order.push_back(v);
            for (int w : tree[v])
                if (in[w] && !seen[w]) seen[w] = 1, st.push_back(w);
        }
        return order;
    }

    static std::vector<int> merge_on(int c, const std::vector<int>& o1, const std::vector<int>& o2) {
        std::vector<int> out;
        auto copy_until = [&](const std::vector<int>& o, bool after) {
            bool passed = false;
            for (int v : o) {
                if (v == c) {
                    passed = true;
                    continue;
                }
                if (passed == after) out.push_back(v);
            }
        };
        copy_until(o1, false);
        copy_until(o2, false);
        out.push_back(c);
        copy_until(o1, true);
        copy_until(o2, true);
        return out;
    }

    std::vector<std::vector<int>> cover(const std::vector<int>& set) const {
        size_t n = set.size();
        if (n <= 1) return {};
        if (n == 2) return {{std::min(set[0], set[1]), std::max(set[0], set[1])}};

        std::vector<char> in(tree.size(), 0);
        for (int v : set) in[v] = 1;
        // subtree sizes from an arbitrary root, then the centroid
        std::vector<int> order = from_root(set, set[0]);
        order.insert(order.begin(), set[0]);
        std::vector<int> parent(tree.size(), -1), size(tree.size(), 1);
        std::vector<char> seen(tree.size(), 0);
        seen[set[0]] = 1;
        for (int v : order)
            for (int w : tree[v])
                if (in[w] && !seen[w]) seen[w] = 1, parent[w] = v;
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (parent[*it] != -1) size[parent[*it]] += size[*it];
        int centroid = -1, best_max = -1;
        for (int v : order) {
            int mx = static_cast<int>(n) - size[v];
            for (int w : tree[v])
                if (in[w] && parent[w] == v) mx = std::max(mx, size[w]);
            if (best_max == -1 || mx < best_max || (mx == best_max && v < centroid)) {
                centroid = v;
                best_max = mx;
            }
        }

        // split the centroid's components, largest first
        std::vector<std::vector<int>> comps;
        std::vector<char> visited(tree.size(), 0);
        visited[centroid] = 1;
        for (int w0 : tree[centroid]) {
            if (!in[w0] || visited[w0]) continue;
            std::vector<int> comp, st{w0};
            visited[w0] = 1;
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                comp.push_back(v);
                for (int w : tree[v])
                    if (in[w] && !visited[w]) visited[w] = 1, st.push_back(w);
            }
            comps.push_back(std::move(comp));
        }
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });

        std::vector<int> side1{centroid}, side2{centroid};
        size_t acc = 0, taken = 0;
        if (3 * comps[0].size() >= n) {
            side1.insert(side1.end(), comps[0].begin(), comps[0].end());
            taken = 1;
        } else {
            while (3 * (acc + 1) < n) {
                const auto& comp = comps[taken++];
                side1.insert(side1.end(), comp.begin(), comp.end());
                acc += comp.size();
            }
        }
        for (size_t j = taken; j < comps.size(); ++j)
            side2.insert(side2.end(), comps[j].begin(), comps[j].end());

        // splitting ordering covers every pair separated by (or touching) the centroid
        std::vector<int> split = toward_root(side1, centroid);
        split.push_back(centroid);
        {
            auto tail = from_root(side2, centroid);
            split.insert(split.end(), tail.begin(), tail.end());
        }

        auto f1 = cover(side1);
        auto f2 = cover(side2);
        auto fallback = [&](const std::vector<int>& side) {
            std::vector<int> o{centroid};
            auto rest = from_root(side, centroid);
            o.insert(o.end(), rest.begin(), rest.end());
            return o;
        };
        std::vector<std::vector<int>> result{split};
        size_t depth = std::max(f1.size(), f2.size());
        for (size_t i = 0; i < depth; ++i) {
            const std::vector<int> o1 = i < f1.size() ? f1[i] : fallback(side1);
            const std::vector<int> o2 = i < f2.size() ? f2[i] : fallback(side2);
            result.push_back(merge_on(centroid, o1, o2));
        }
        return result;
    }
};

}  // namespace

std::vector<Ordering> forward_cover_bioriented(const Digraph& g) {
    for (auto [u, v] : g.arcs)
        if (!g.has_arc(v, u))
            throw std::invalid_argument("forward_cover_bioriented: arc without its reverse");
    if (g.n == 0) return {};
    if (!is_strong(g)) throw PreconditionError("forward_cover_bioriented: graph is disconnected");

    // BFS spanning tree
    std::vector<std::vector<int>> tree(g.n);
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        for (int w : g.out_adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            tree[v].push_back(w);
            tree[w].push_back(v);
            queue.push_back(w);
        }
    }
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    CoverBuilder builder{tree};
    std::vector<Ordering> out;
    for (auto& perm : builder.cover(all)) out.push_back(Ordering::from_perm(std::move(perm)));
    return out;
}

CheckResult verify_forward_cover(const Digraph& d, const std::vector<Ordering>& orderings) {
    if (d.n <= 1) return {};
    BitMatrix covered(d.n, d.n);
    for (const Ordering& ord : orderings) {
        BitMatrix rows = reach_rows(forward_dag(d, ord));
        for (int u = 0; u < d.n; ++u)
            for (int v = 0; v < d.n; ++v)
                if (rows.test(u, v)) covered.set(u, v);
    }
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v)
            if (!covered.test(u, v) && !covered.test(v, u))
                return {false, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} not covered"};
    return {};
}

}  // namespace fcpp
