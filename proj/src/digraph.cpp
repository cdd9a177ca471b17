#include "fcpp/digraph.hpp"

#include <algorithm>
#include <bit>

namespace fcpp {

long long BitMatrix::count_row(int r) const {
    long long c = 0;
    const std::uint64_t* row = &bits_[static_cast<size_t>(r) * words_];
    for (int w = 0; w < words_; ++w) c += std::popcount(row[w]);
    return c;
}

bool Digraph::has_arc(int u, int v) const { return arc_index(u, v) >= 0; }

int Digraph::arc_index(int u, int v) const {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{u, v});
    if (it != arcs.end() && *it == Arc{u, v}) return static_cast<int>(it - arcs.begin());
    return -1;
}

Digraph build_digraph(int n, const std::vector<Arc>& arcs) {
    if (n < 0) throw std::invalid_argument("build_digraph: negative vertex count");
    for (size_t idx = 0; idx < arcs.size(); ++idx) {
        auto [u, v] = arcs[idx];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_digraph: arc " + std::to_string(idx) + " has vertex out of range");
        if (u == v)
            throw std::invalid_argument("build_digraph: arc " + std::to_string(idx) + " is a self-loop");
    }
    Digraph d;
    d.n = n;
    d.arcs = arcs;
    std::sort(d.arcs.begin(), d.arcs.end());
    if (std::adjacent_find(d.arcs.begin(), d.arcs.end()) != d.arcs.end())
        throw std::invalid_argument("build_digraph: duplicate arc");
    d.out_adj.assign(n, {});
    d.in_adj.assign(n, {});
    for (auto [u, v] : d.arcs) {
        d.out_adj[u].push_back(v);
        d.in_adj[v].push_back(u);
    }
    for (auto& l : d.in_adj) std::sort(l.begin(), l.end());
    return d;
}

namespace {

// Iterative Tarjan over an adjacency view with an optional skip vertex.
// Components are renumbered so that ids form a topological order of the
// condensation (arcs go from smaller to larger id).
SccPartition tarjan(int n, const std::vector<std::vector<int>>& out_adj, int skip) {
    SccPartition p;
    p.comp.assign(n, -1);
    std::vector<int> low(n, -1), num(n, -1), stack, comp_rev;
    std::vector<char> on_stack(n, 0);
    comp_rev.assign(n, -1);
    int counter = 0, ncomp = 0;

    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> frames;
    for (int s = 0; s < n; ++s) {
        if (s == skip || num[s] != -1) continue;
        frames.push_back({s, 0});
        num[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next < out_adj[v].size()) {
                int w = out_adj[v][f.next++];
                if (w == skip) continue;
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
    // Tarjan finishes components in reverse topological order; flip ids.
    p.count = ncomp;
    p.members.assign(ncomp, {});
    for (int v = 0; v < n; ++v) {
        if (v == skip) continue;
        p.comp[v] = ncomp - 1 - comp_rev[v];
        p.members[p.comp[v]].push_back(v);
    }
    return p;
}

}  // namespace

SccPartition scc(const Digraph& d) { return tarjan(d.n, d.out_adj, -1); }

bool is_strong(const Digraph& d) { return scc(d).count == 1; }

Condensation condensation_of(const Digraph& d, std::optional<int> excluded) {
    int skip = excluded.value_or(-1);
    if (excluded && (skip < 0 || skip >= d.n))
        throw std::invalid_argument("condensation_of: excluded vertex out of range");
    Condensation c;
    c.parts = tarjan(d.n, d.out_adj, skip);
    std::vector<Arc> qarcs;
    for (auto [u, v] : d.arcs) {
        if (u == skip || v == skip) continue;
        int cu = c.parts.comp[u], cv = c.parts.comp[v];
        if (cu != cv) qarcs.push_back({cu, cv});
    }
    std::sort(qarcs.begin(), qarcs.end());
    qarcs.erase(std::unique(qarcs.begin(), qarcs.end()), qarcs.end());
    c.graph = build_digraph(c.parts.count, qarcs);
    c.comp_size.resize(c.parts.count);
    for (int i = 0; i < c.parts.count; ++i) c.comp_size[i] = static_cast<int>(c.parts.members[i].size());
    return c;
}

std::vector<int> out_section_sizes(const Digraph& d, int excluded) {
    if (excluded < 0 || excluded >= d.n)
        throw std::invalid_argument("out_section_sizes: excluded vertex out of range");
    Condensation c = condensation_of(d, excluded);
    int k = c.parts.count;
    // Reachable vertex set per component, reverse topological order.
    BitMatrix reach(k, d.n);
    for (int comp = k - 1; comp >= 0; --comp) {
        for (int v : c.parts.members[comp]) reach.set(comp, v);
        for (int succ : c.graph.out_adj[comp]) reach.or_row(comp, succ);
    }
    std::vector<int> sizes(d.n, 0);
    for (int v = 0; v < d.n; ++v)
        if (v != excluded) sizes[v] = static_cast<int>(reach.count_row(c.parts.comp[v]));
    return sizes;
}

BitMatrix reach_rows(const Digraph& d) {
    Condensation c = condensation_of(d);
    int k = c.parts.count;
    BitMatrix comp_reach(k, d.n);
    for (int comp = k - 1; comp >= 0; --comp) {
        for (int v : c.parts.members[comp]) comp_reach.set(comp, v);
        for (int succ : c.graph.out_adj[comp]) comp_reach.or_row(comp, succ);
    }
    BitMatrix rows(d.n, d.n);
    for (int v = 0; v < d.n; ++v) {
        for (int w = 0; w < d.n; ++w)
            if (comp_reach.test(c.parts.comp[v], w)) rows.set(v, w);
    }
    return rows;
}

Ordering Ordering::from_perm(std::vector<int> perm) {
    Ordering o;
    int n = static_cast<int>(perm.size());
    o.pos.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = perm[i];
        if (v < 0 || v >= n || o.pos[v] != -1)
            throw std::invalid_argument("Ordering: not a permutation");
        o.pos[v] = i;
    }
    o.perm = std::move(perm);
    return o;
}

Ordering Ordering::identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return from_perm(std::move(p));
}

Digraph forward_dag(const Digraph& d, const Ordering& ord) {
    if (ord.n() != d.n) throw std::invalid_argument("forward_dag: ordering size mismatch");
    std::vector<Arc> kept;
    for (auto [u, v] : d.arcs)
        if (ord.pos[u] < ord.pos[v]) kept.push_back({u, v});
    return build_digraph(d.n, kept);
}

long long reach_pair_count(const Digraph& d) {
    Condensation c = condensation_of(d);
    int k = c.parts.count;
    BitMatrix comp_reach(k, d.n);
    for (int comp = k - 1; comp >= 0; --comp) {
        for (int v : c.parts.members[comp]) comp_reach.set(comp, v);
        for (int succ : c.graph.out_adj[comp]) comp_reach.or_row(comp, succ);
    }
    long long total = 0;
    for (int v = 0; v < d.n; ++v) total += comp_reach.count_row(c.parts.comp[v]) - 1;
    return total;
}

Digraph minimalize_strong(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("minimalize_strong: digraph is not strong");
    std::vector<Arc> arcs = d.arcs;  // already sorted ascending
    std::vector<char> removed(arcs.size(), 0);
    for (size_t i = 0; i < arcs.size(); ++i) {
        std::vector<Arc> trial;
        for (size_t j = 0; j < arcs.size(); ++j)
            if (!removed[j] && j != i) trial.push_back(arcs[j]);
        if (is_strong(build_digraph(d.n, trial))) removed[i] = 1;
    }
    std::vector<Arc> kept;
    for (size_t j = 0; j < arcs.size(); ++j)
        if (!removed[j]) kept.push_back(arcs[j]);
    return build_digraph(d.n, kept);
}

}  // namespace fcpp
