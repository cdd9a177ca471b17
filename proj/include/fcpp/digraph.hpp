#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fcpp {

using Arc = std::pair<int, int>;

/// Thrown when an operation's structural precondition is violated
/// (e.g. a non-strong digraph passed to the bi-tree pipeline).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row-per-vertex bitset matrix used for reachability closures.
/// Memory is rows * cols / 8 bytes, fine for desk-scale n.
class BitMatrix {
public:
    BitMatrix(int rows, int cols)
        : cols_(cols), words_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_, 0) {}

    void set(int r, int c) { bits_[static_cast<size_t>(r) * words_ + c / 64] |= (std::uint64_t{1} << (c % 64)); }
    bool test(int r, int c) const {
        return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
    }
    // row dst |= row src
    void or_row(int dst, int src) {
        std::uint64_t* d = &bits_[static_cast<size_t>(dst) * words_];
        const std::uint64_t* s = &bits_[static_cast<size_t>(src) * words_];
        for (int w = 0; w < words_; ++w) d[w] |= s[w];
    }
    long long count_row(int r) const;
    int cols() const { return cols_; }

private:
    int cols_, words_;
    std::vector<std::uint64_t> bits_;
};

/// Simple digraph on vertices 0..n-1. Self-loops and duplicate arcs are
/// rejected at construction; 2-cycles (both uv and vu) are allowed.
struct Digraph {
    int n = 0;
    std::vector<Arc> arcs;  // sorted lexicographically
    std::vector<std::vector<int>> out_adj, in_adj;  // neighbor lists, ascending

    int arc_count() const { return static_cast<int>(arcs.size()); }
    bool has_arc(int u, int v) const;
    int arc_index(int u, int v) const;  // -1 if absent
};

struct SccPartition {
    std::vector<int> comp;                   // vertex -> component id (-1 for an excluded vertex)
    std::vector<std::vector<int>> members;   // component id -> vertices, ascending
    int count = 0;
};

/// Quotient digraph over SCC ids. Component ids are a topological order:
/// every arc goes from a smaller id to a larger id.
struct Condensation {
    Digraph graph;                 // on component ids
    std::vector<int> comp_size;    // per component
    SccPartition parts;
};

/// Vertex enumeration: perm[position] = vertex, pos[vertex] = position.
struct Ordering {
    std::vector<int> perm;
    std::vector<int> pos;

    int n() const { return static_cast<int>(perm.size()); }
    static Ordering from_perm(std::vector<int> perm);
    static Ordering identity(int n);
};

/// Injective positive labels per arc, parallel to Digraph::arcs.
struct Schedule {
    std::vector<long long> label;
};

Digraph build_digraph(int n, const std::vector<Arc>& arcs);

SccPartition scc(const Digraph& d);
bool is_strong(const Digraph& d);

/// Condensation of d, optionally with one vertex removed first.
Condensation condensation_of(const Digraph& d, std::optional<int> excluded = std::nullopt);

/// Size of the out-section of each vertex in d minus `excluded`
/// (a vertex counts itself). Entry for `excluded` is 0.
std::vector<int> out_section_sizes(const Digraph& d, int excluded);

/// Per-vertex reachability closure: row v contains v and every vertex
/// reachable from v by a nonempty directed path.
BitMatrix reach_rows(const Digraph& d);

/// Sub-digraph keeping exactly the arcs (u,v) with pos(u) < pos(v).
Digraph forward_dag(const Digraph& d, const Ordering& ord);

/// Number of ordered pairs (u,v), u != v, with a directed path u -> v.
long long reach_pair_count(const Digraph& d);

/// Spanning strong sub-digraph from which no single arc can be removed,
/// obtained by attempting deletions in ascending (u,v) order.
Digraph minimalize_strong(const Digraph& d);

}  // namespace fcpp
