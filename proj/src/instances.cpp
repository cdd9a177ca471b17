#include "fcpp/instances.hpp"

#include <algorithm>
#include <random>

namespace fcpp {

Prop2Instance gen_prop2(int k) {
    if (k < 1) throw std::invalid_argument("gen_prop2: k must be >= 1");
    Prop2Instance inst;
    inst.k = k;
    int kk = k * k;
    int id = 0;
    inst.x = id++;
    for (int j = 0; j < kk; ++j) inst.A.push_back(id++);
    for (int j = 0; j < k; ++j) inst.Aprime.push_back(id++);
    for (int j = 0; j < kk; ++j) inst.X.push_back(id++);
    for (int j = 0; j < k; ++j) inst.Bprime.push_back(id++);
    for (int j = 0; j < kk; ++j) inst.B.push_back(id++);
    inst.y = id++;

    std::vector<Arc> arcs;
    for (int a : inst.A) arcs.push_back({inst.x, a});
    // A_i = i-th row of A, a_i collects it
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) arcs.push_back({inst.A[i * k + j], inst.Aprime[i]});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) arcs.push_back({inst.Aprime[i], inst.X[i * k + j]});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) arcs.push_back({inst.X[i * k + j], inst.Bprime[j]});
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) arcs.push_back({inst.Bprime[j], inst.B[j * k + i]});
    for (int b : inst.B) arcs.push_back({b, inst.y});
    arcs.push_back({inst.y, inst.x});

    inst.graph = build_digraph(id, arcs);
    inst.canonical = Ordering::identity(id);
    return inst;
}

namespace {

void leaves_under(int v, int n_nodes, std::vector<int>& out) {
    if (2 * v + 1 >= n_nodes) {
        out.push_back(v);
        return;
    }
    leaves_under(2 * v + 1, n_nodes, out);
    leaves_under(2 * v + 2, n_nodes, out);
}

}  // namespace

RequestInstance gen_binary_tree_requests(int h, MatchingMode mode, std::uint64_t seed) {
    if (h < 1) throw std::invalid_argument("gen_binary_tree_requests: height must be >= 1");
    RequestInstance inst;
    inst.height = h;
    int n_nodes = (1 << (h + 1)) - 1;
    std::vector<Arc> arcs;
    for (int v = 1; v < n_nodes; ++v) {
        int p = (v - 1) / 2;
        arcs.push_back({p, v});
        arcs.push_back({v, p});
    }
    inst.graph = build_digraph(n_nodes, arcs);
    leaves_under(0, n_nodes, inst.leaves);
    inst.matchings.assign(n_nodes, {});

    int internal = (1 << h) - 1;
    for (int v = 0; v < internal; ++v) {
        std::vector<int> left, right;
        leaves_under(2 * v + 1, n_nodes, left);
        leaves_under(2 * v + 2, n_nodes, right);
        // identity and hypercube both pair equal in-order ranks: the ranks
        // differ exactly in the branching bit, which is the hypercube edge
        if (mode == MatchingMode::seeded_random) {
            std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + v + 1);
            std::shuffle(right.begin(), right.end(), rng);
        }
        for (size_t j = 0; j < left.size(); ++j) {
            Arc req{std::min(left[j], right[j]), std::max(left[j], right[j])};
            inst.matchings[v].push_back(req);
            inst.requests.push_back(req);
        }
    }
    return inst;
}

Digraph gen_random_strong(int n, int extra_arcs, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_strong: need n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Arc> arcs;
    std::vector<char> present(static_cast<size_t>(n) * n, 0);
    auto add = [&](int u, int v) {
        arcs.push_back({u, v});
        present[static_cast<size_t>(u) * n + v] = 1;
    };
    for (int i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n]);
    long long capacity = static_cast<long long>(n) * (n - 1) - n;
    if (extra_arcs > capacity) throw std::invalid_argument("gen_random_strong: extra_arcs exceeds capacity");
    std::uniform_int_distribution<int> pick(0, n - 1);
    int added = 0;
    while (added < extra_arcs) {
        int u = pick(rng), v = pick(rng);
        if (u == v || present[static_cast<size_t>(u) * n + v]) continue;
        add(u, v);
        ++added;
    }
    return build_digraph(n, arcs);
}

Digraph gen_circuit(int n) {
    if (n < 2) throw std::invalid_argument("gen_circuit: need n >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return build_digraph(n, arcs);
}

Digraph gen_bioriented(int n, const std::vector<Arc>& edges) {
    std::vector<Arc> arcs;
    for (auto [u, v] : edges) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    Digraph d = build_digraph(n, arcs);
    if (n > 0 && !is_strong(d))
        throw std::invalid_argument("gen_bioriented: input graph is disconnected");
    return d;
}

}  // namespace fcpp
