#include "fcpp/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace fcpp {

BruteForceT brute_force_t(const Digraph& d) {
    if (d.n > 8) throw std::invalid_argument("brute_force_t: n must be <= 8");
    std::vector<int> perm(d.n);
    std::iota(perm.begin(), perm.end(), 0);
    BruteForceT result;
    result.t = -1;
    do {
        Ordering ord = Ordering::from_perm(perm);
        long long c = count_forward_pairs(d, ord);
        if (c > result.t) {
            result.t = c;
            result.best = std::move(ord);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

long long dag_balanced_bitree_max(const Digraph& d) {
    Condensation c = condensation_of(d);
    if (c.parts.count != d.n) throw std::invalid_argument("dag_balanced_bitree_max: input has a cycle");
    BitMatrix desc = reach_rows(d);
    long long best = 0;
    for (int r = 0; r < d.n; ++r) {
        long long nd = desc.count_row(r) - 1;  // the row contains r itself
        long long na = 0;
        for (int u = 0; u < d.n; ++u)
            if (u != r && desc.test(u, r)) ++na;
        best = std::max(best, 2 * std::min(na, nd) + 1);
    }
    return best;
}

std::pair<long long, long long> best_cycle_bitree(const CycleLabels& labels) {
    int len = static_cast<int>(labels.cycle.size());
    if (len == 0) throw std::invalid_argument("best_cycle_bitree: empty cycle");
    if (len > 12) throw std::invalid_argument("best_cycle_bitree: cycle too long for enumeration");
    std::pair<long long, long long> best{-1, -1};
    long long best_min = -1, best_sum = -1;
    // B⁻ = p vertices ending at the center, B⁺ = q vertices starting there
    for (int c = 0; c < len; ++c) {
        for (int p = 0; p < len; ++p) {
            for (int q = 0; p + q < len; ++q) {
                long long a = 0, b = 0;
                for (int j = 0; j <= p; ++j) a += labels.i[((c - j) % len + len) % len];
                for (int j = 0; j <= q; ++j) b += labels.o[(c + j) % len];
                long long mn = std::min(a, b), sum = a + b;
                if (mn > best_min || (mn == best_min && sum > best_sum)) {
                    best = {a, b};
                    best_min = mn;
                    best_sum = sum;
                }
            }
        }
    }
    return best;
}

}  // namespace fcpp
