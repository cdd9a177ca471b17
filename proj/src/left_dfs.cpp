#include "fcpp/left_dfs.hpp"

#include <algorithm>

namespace fcpp {

namespace {

// Tarjan restricted to the vertices flagged active, excluding `skip`.
// Component ids form a topological order of the restricted condensation.
struct SubScc {
    std::vector<int> comp;                  // -1 for inactive vertices
    std::vector<std::vector<int>> members;  // ascending vertex ids
    int count = 0;
};

SubScc sub_scc(const Digraph& d, const std::vector<char>& active, int skip) {
    int n = d.n;
    SubScc p;
    p.comp.assign(n, -1);
    std::vector<int> low(n, -1), num(n, -1), stack, comp_rev(n, -1);
    std::vector<char> on_stack(n, 0);
    int counter = 0, ncomp = 0;
    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> frames;
    for (int s = 0; s < n; ++s) {
        if (!active[s] || s == skip || num[s] != -1) continue;
        frames.push_back({s, 0});
        num[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next < d.out_adj[v].size()) {
                int w = d.out_adj[v][f.next++];
                if (!active[w] || w == skip) continue;
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp_rev[w] = ncomp;
                    } while (w != v);
                    ++ncomp;
                }
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    p.count = ncomp;
    p.members.assign(ncomp, {});
    for (int v = 0; v < n; ++v) {
        if (comp_rev[v] == -1) continue;
        p.comp[v] = ncomp - 1 - comp_rev[v];
        p.members[p.comp[v]].push_back(v);
    }
    return p;
}

// Select the next (leftmost remaining) child of `root` inside the active
// subset and return it together with its out-section.
std::pair<int, std::vector<int>> pick_child(const Digraph& d, const std::vector<char>& active,
                                            int root, const std::vector<long long>& w) {
    SubScc p = sub_scc(d, active, root);
    int k = p.count;
    // Out-section closure per component over the restricted condensation.
    BitMatrix reach(k, d.n);
    std::vector<std::vector<int>> csucc(k);
    std::vector<char> has_in(k, 0);
    for (auto [u, v] : d.arcs) {
        if (u == root || v == root || !active[u] || !active[v]) continue;
        int cu = p.comp[u], cv = p.comp[v];
        if (cu != cv) {
            csucc[cu].push_back(cv);
            has_in[cv] = 1;
        }
    }
    for (int comp = k - 1; comp >= 0; --comp) {
        for (int v : p.members[comp]) reach.set(comp, v);
        for (int succ : csucc[comp]) reach.or_row(comp, succ);
    }
    auto comp_weight = [&](int comp) {
        long long total = 0;
        for (int v = 0; v < d.n; ++v)
            if (reach.test(comp, v)) total += w.empty() ? 1 : w[v];
        return total;
    };
    int best = -1;
    long long best_weight = -1;
    for (int comp = 0; comp < k; ++comp) {
        if (has_in[comp]) continue;
        // every source component must be entered through the root
        bool root_neighbor = false;
        for (int v : d.out_adj[root])
            if (active[v] && p.comp[v] == comp) root_neighbor = true;
        if (!root_neighbor)
            throw PreconditionError("left_maximal_dfs: root does not out-generate the digraph");
        long long cw = comp_weight(comp);
        if (cw > best_weight ||
            (cw == best_weight && p.members[comp][0] < p.members[best][0])) {
            best = comp;
            best_weight = cw;
        }
    }
    int y = -1;
    for (int v : d.out_adj[root])
        if (active[v] && p.comp[v] == best && (y == -1 || v < y)) y = v;
    std::vector<int> section;
    for (int v = 0; v < d.n; ++v)
        if (reach.test(best, v)) section.push_back(v);
    return {y, section};
}

}  // namespace

DfsTree left_maximal_dfs(const Digraph& d, int root, const std::vector<long long>& weights) {
    if (root < 0 || root >= d.n) throw std::invalid_argument("left_maximal_dfs: root out of range");
    if (!weights.empty() && static_cast<int>(weights.size()) != d.n)
        throw std::invalid_argument("left_maximal_dfs: weight vector size mismatch");
    DfsTree t;
    t.root = root;
    t.parent.assign(d.n, -1);
    t.children.assign(d.n, {});
    t.subtree_size.assign(d.n, 1);
    t.dfs_index.assign(d.n, -1);

    struct Task {
        int root;
        std::vector<int> vertices;  // subset containing root
    };
    std::vector<int> all(d.n);
    for (int v = 0; v < d.n; ++v) all[v] = v;
    std::vector<Task> tasks{{root, std::move(all)}};
    std::vector<char> active(d.n, 0);
    while (!tasks.empty()) {
        Task task = std::move(tasks.back());
        tasks.pop_back();
        std::fill(active.begin(), active.end(), 0);
        int remaining = 0;
        for (int v : task.vertices) active[v] = 1, ++remaining;
        while (remaining > 1) {
            auto [y, section] = pick_child(d, active, task.root, weights);
            t.parent[y] = task.root;
            t.children[task.root].push_back(y);
            tasks.push_back({y, section});
            for (int v : section) active[v] = 0, --remaining;
        }
    }

    // preorder indices and subtree sizes over the final structure
    int idx = 0;
    std::vector<std::pair<int, size_t>> st{{root, 0}};
    t.dfs_index[root] = idx++;
    while (!st.empty()) {
        auto& [v, next] = st.back();
        if (next < t.children[v].size()) {
            int c = t.children[v][next++];
            t.dfs_index[c] = idx++;
            st.push_back({c, 0});
        } else {
            st.pop_back();
            if (!st.empty()) t.subtree_size[st.back().first] += t.subtree_size[v];
        }
    }
    return t;
}

namespace {

// preorder entry/exit times from the stored children order
void euler_times(const DfsTree& t, std::vector<int>& tin, std::vector<int>& tout) {
    int n = t.n(), clock = 0;
    tin.assign(n, -1);
    tout.assign(n, -1);
    std::vector<std::pair<int, size_t>> st{{t.root, 0}};
    tin[t.root] = clock++;
    while (!st.empty()) {
        auto& [v, next] = st.back();
        if (next < t.children[v].size()) {
            int c = t.children[v][next++];
            tin[c] = clock++;
            st.push_back({c, 0});
        } else {
            tout[v] = clock;
            st.pop_back();
        }
    }
}

}  // namespace

CheckResult verify_dfs_tree(const Digraph& d, const DfsTree& t) {
    if (t.n() != d.n) return {false, "tree size differs from digraph"};
    if (t.root < 0 || t.root >= d.n || t.parent[t.root] != -1) return {false, "invalid root"};
    int edges = 0;
    for (int v = 0; v < d.n; ++v) {
        for (int c : t.children[v]) {
            if (c < 0 || c >= d.n || t.parent[c] != v) return {false, "parent/children mismatch"};
            if (!d.has_arc(v, c)) return {false, "tree arc missing from digraph"};
            ++edges;
        }
    }
    if (edges != d.n - 1) return {false, "not a spanning tree"};
    std::vector<int> tin, tout;
    euler_times(t, tin, tout);
    for (int v = 0; v < d.n; ++v)
        if (tin[v] < 0) return {false, "vertex unreachable from root"};
    for (auto [u, v] : d.arcs) {
        bool v_in_u = tin[u] <= tin[v] && tin[v] < tout[u];
        bool u_in_v = tin[v] <= tin[u] && tin[u] < tout[v];
        if (v_in_u || u_in_v) continue;
        if (tin[v] > tin[u]) return {false, "left-to-right cross arc"};
    }
    return {};
}

CheckResult verify_left_maximal(const DfsTree& t, const std::vector<long long>& weights) {
    int n = t.n();
    std::vector<long long> w(n, 1);
    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != n) return {false, "weight vector size mismatch"};
        w = weights;
    }
    // subtree weights bottom-up in reverse preorder
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> st{t.root};
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        order.push_back(v);
        for (int c : t.children[v]) st.push_back(c);
    }
    std::vector<long long> sub(w);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : t.children[*it]) sub[*it] += sub[c];
    for (int v = 0; v < n; ++v)
        for (size_t i = 1; i < t.children[v].size(); ++i)
            if (sub[t.children[v][i - 1]] < sub[t.children[v][i]])
                return {false, "child subtree sizes increase left to right"};
    return {};
}

std::vector<int> left_path(const DfsTree& t) {
    std::vector<int> path{t.root};
    while (!t.children[path.back()].empty()) path.push_back(t.children[path.back()][0]);
    return path;
}

std::vector<int> left_subtree(const DfsTree& t, int x, int y) {
    auto lp = left_path(t);
    if (std::find(lp.begin(), lp.end(), x) == lp.end())
        throw std::invalid_argument("left_subtree: x is not on the left path");
    auto it = std::find(t.children[x].begin(), t.children[x].end(), y);
    if (it == t.children[x].end())
        throw std::invalid_argument("left_subtree: y is not a child of x");
    std::vector<int> result{x};
    for (auto c = t.children[x].begin(); c <= it; ++c) {
        std::vector<int> st{*c};
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            result.push_back(v);
            for (int ch : t.children[v]) st.push_back(ch);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace fcpp
