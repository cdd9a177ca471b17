#pragma once

#include <iosfwd>
#include <string>

#include "fcpp/bitree.hpp"
#include "fcpp/ordering.hpp"

namespace fcpp {

// Digraph text format: optional '#' comment lines, one "n m" header line,
// then m lines "u v" (0-based). The writer emits arcs sorted
// lexicographically.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);

// Ordering file: a single line of space-separated vertex ids.
Ordering read_ordering(std::istream& in, int n);
void write_ordering(std::ostream& out, const Ordering& ord);

// Schedule file: one "u v label" line per arc.
Schedule read_schedule(std::istream& in, const Digraph& d);
void write_schedule(std::ostream& out, const Digraph& d, const Schedule& s);

// Requests file: one "u v" line per request.
std::vector<Arc> read_requests(std::istream& in);
void write_requests(std::ostream& out, const std::vector<Arc>& requests);

// Weights file: one integer per line, n lines.
std::vector<long long> read_weights(std::istream& in, int n);

std::string dot_digraph(const Digraph& d);
std::string dot_dfs_tree(const Digraph& d, const DfsTree& t);
std::string dot_ico(const Digraph& d, const IcoDecomposition& dec);
std::string dot_bitree(const Digraph& d, const BiTree& b);

std::string json_ico(const IcoDecomposition& dec);
std::string json_bitree(const BiTree& b);

}  // namespace fcpp
