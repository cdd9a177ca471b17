#include "fcpp/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace fcpp {

namespace {

// next non-comment, non-blank line
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw std::invalid_argument("read_digraph: missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("read_digraph: malformed header, expected \"n m\"");
    std::vector<Arc> arcs;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::invalid_argument("read_digraph: expected " + std::to_string(m) + " arcs");
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("read_digraph: malformed arc line: " + line);
        arcs.push_back({u, v});
    }
    return build_digraph(static_cast<int>(n), arcs);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.n << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs) out << u << ' ' << v << '\n';
}

Ordering read_ordering(std::istream& in, int n) {
    std::string line;
    if (!next_data_line(in, line)) throw std::invalid_argument("read_ordering: empty input");
    std::istringstream ls(line);
    std::vector<int> perm;
    int v;
    while (ls >> v) perm.push_back(v);
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("read_ordering: expected " + std::to_string(n) + " vertices");
    return Ordering::from_perm(std::move(perm));
}

void write_ordering(std::ostream& out, const Ordering& ord) {
    for (int i = 0; i < ord.n(); ++i) out << (i ? " " : "") << ord.perm[i];
    out << '\n';
}

Schedule read_schedule(std::istream& in, const Digraph& d) {
    Schedule s;
    s.label.assign(d.arcs.size(), -1);
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream ls(line);
        int u, v;
        long long label;
        if (!(ls >> u >> v >> label))
            throw std::invalid_argument("read_schedule: malformed line: " + line);
        int idx = d.arc_index(u, v);
        if (idx < 0) throw std::invalid_argument("read_schedule: unknown arc in line: " + line);
        if (label <= 0) throw std::invalid_argument("read_schedule: labels must be positive");
        s.label[idx] = label;
    }
    for (long long l : s.label)
        if (l < 0) throw std::invalid_argument("read_schedule: arc without a label");
    return s;
}

void write_schedule(std::ostream& out, const Digraph& d, const Schedule& s) {
    for (size_t i = 0; i < d.arcs.size(); ++i)
        out << d.arcs[i].first << ' ' << d.arcs[i].second << ' ' << s.label[i] << '\n';
}

std::vector<Arc> read_requests(std::istream& in) {
    std::vector<Arc> reqs;
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("read_requests: malformed line: " + line);
        reqs.push_back({u, v});
    }
    return reqs;
}

void write_requests(std::ostream& out, const std::vector<Arc>& requests) {
    for (auto [u, v] : requests) out << u << ' ' << v << '\n';
}

std::vector<long long> read_weights(std::istream& in, int n) {
    std::vector<long long> w;
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream ls(line);
        long long x;
        while (ls >> x) w.push_back(x);
    }
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("read_weights: expected " + std::to_string(n) + " integers");
    return w;
}

std::string dot_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < d.n; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : d.arcs) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_dfs_tree(const Digraph& d, const DfsTree& t) {
    std::ostringstream out;
    out << "digraph T {\n  ordering=out;\n";
    for (int v = 0; v < d.n; ++v)
        out << "  " << v << " [label=\"" << v << " (#" << t.dfs_index[v] << ")\"];\n";
    for (int v = 0; v < d.n; ++v) {
        for (int c : t.children[v]) out << "  " << v << " -> " << c << ";\n";
        // invisible sibling chain pins the left-right order in the layout
        for (size_t i = 1; i < t.children[v].size(); ++i)
            out << "  " << t.children[v][i - 1] << " -> " << t.children[v][i]
                << " [style=invis, constraint=false];\n";
    }
    for (auto [u, v] : d.arcs)
        if (t.parent[v] != u) out << "  " << u << " -> " << v << " [style=dashed, color=gray];\n";
    out << "}\n";
    return out.str();
}

std::string dot_ico(const Digraph& d, const IcoDecomposition& dec) {
    std::ostringstream out;
    out << "digraph ICO {\n";
    for (int v : dec.I) out << "  " << v << " [style=filled, fillcolor=lightblue];\n";
    for (int v : dec.cycle) out << "  " << v << " [style=filled, fillcolor=gold];\n";
    for (int v : dec.O) out << "  " << v << " [style=filled, fillcolor=lightpink];\n";
    std::vector<char> cyc_arc(d.arcs.size(), 0);
    for (int i = 0; i < dec.cycle_size(); ++i) {
        int u = dec.cycle[i], v = dec.cycle[(i + 1) % dec.cycle_size()];
        int idx = d.arc_index(u, v);
        if (idx >= 0) cyc_arc[idx] = 1;
    }
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        out << "  " << d.arcs[i].first << " -> " << d.arcs[i].second;
        if (cyc_arc[i]) out << " [penwidth=2, color=darkorange]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_bitree(const Digraph& d, const BiTree& b) {
    std::ostringstream out;
    out << "digraph B {\n";
    out << "  " << b.center << " [style=filled, fillcolor=gold];\n";
    for (int v = 0; v < d.n; ++v) {
        if (v == b.center) continue;
        if (b.in_minus(v)) out << "  " << v << " [style=filled, fillcolor=lightblue];\n";
        if (b.in_plus(v)) out << "  " << v << " [style=filled, fillcolor=lightpink];\n";
    }
    for (int v = 0; v < d.n; ++v) {
        if (v == b.center) continue;
        if (b.in_next[v] != -1) out << "  " << v << " -> " << b.in_next[v] << " [color=blue];\n";
        if (b.out_prev[v] != -1) out << "  " << b.out_prev[v] << " -> " << v << " [color=red];\n";
    }
    out << "}\n";
    return out.str();
}

std::string json_ico(const IcoDecomposition& dec) {
    nlohmann::json j;
    j["I"] = dec.I;
    j["C_cycle"] = dec.cycle;
    j["O"] = dec.O;
    j["closing_arc"] = {dec.closing_arc.first, dec.closing_arc.second};
    return j.dump();
}

std::string json_bitree(const BiTree& b) {
    nlohmann::json j;
    j["center"] = b.center;
    auto side = [&](const std::vector<int>& next) {
        nlohmann::json arr = nlohmann::json::array();
        for (int v = 0; v < b.n; ++v)
            if (v != b.center && next[v] != -1) arr.push_back({v, next[v]});
        return arr;
    };
    j["in_tree"] = side(b.in_next);
    j["out_tree"] = side(b.out_prev);
    j["value"] = {b.value.first, b.value.second};
    return j.dump();
}

}  // namespace fcpp
