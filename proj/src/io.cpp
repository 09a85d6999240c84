#include "bpbvd/io.hpp"

#include <istream>
#include <sstream>

#include "bpbvd/problem.hpp"

namespace bpbvd {

namespace {

bool content_line(std::string& line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra)) throw ParseError(lineno, "expected header `n m`");
        if (n < 0 || m < 0) throw ParseError(lineno, "negative vertex or edge count");
        break;
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header `n m`");

    Graph g(static_cast<std::size_t>(n));
    long long read = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream ss(line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) throw ParseError(lineno, "expected edge `u v`");
        if (u < 0 || v >= n || u >= v) throw ParseError(lineno, "edge must satisfy 0 <= u < v < n");
        if (++read > m) throw ParseError(lineno, "more edges than declared");
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError(lineno, "duplicate edge");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (read != m) throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(read));
    return g;
}

Graph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    if (g.id_bound() != g.num_vertices()) throw std::invalid_argument("graph ids are not dense; use to_edge_list_renumbered");
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string to_edge_list_renumbered(const Graph& g) {
    auto verts = g.vertices();
    std::vector<Vertex> index(g.id_bound(), 0);
    std::ostringstream out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        index[verts[i]] = static_cast<Vertex>(i);
        out << "# id " << i << ' ' << verts[i] << '\n';
    }
    out << verts.size() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << index[e.u] << ' ' << index[e.v] << '\n';
    return out.str();
}

bool is_valid_solution(const Instance& inst, const VertexSet& s) {
    if (static_cast<int>(s.size()) > inst.k) return false;
    for (Vertex v : s)
        if (!inst.graph.contains(v)) return false;
    return is_in_phi(inst.graph.without(s), inst.pclass, inst.d);
}

}  // namespace bpbvd
