#include "bpbvd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bpbvd {

Graph::Graph(std::size_t n) : adj_(n), alive_(n, 1), live_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check(Vertex v) const {
    if (!contains(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    ++live_;
    return static_cast<Vertex>(adj_.size() - 1);
}

void Graph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) throw std::out_of_range("no edge between given vertices");
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --edges_;
}

void Graph::remove_vertex(Vertex v) {
    check(v);
    for (Vertex w : adj_[v]) {
        auto& aw = adj_[w];
        aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
    }
    edges_ -= adj_[v].size();
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    alive_[v] = 0;
    --live_;
}

void Graph::remove_vertices(std::span<const Vertex> vs) {
    for (Vertex v : vs) remove_vertex(v);
}

void Graph::contract(Vertex keep, Vertex gone) {
    check(keep);
    check(gone);
    if (keep == gone) throw std::invalid_argument("cannot contract a vertex with itself");
    std::vector<Vertex> moved(adj_[gone].begin(), adj_[gone].end());
    remove_vertex(gone);
    for (Vertex w : moved)
        if (w != keep) add_edge(keep, w);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check(v);
    return adj_[v];
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(live_);
    for (Vertex v = 0; v < adj_.size(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        if (alive_[u])
            for (Vertex v : adj_[u])
                if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    Graph h;
    h.adj_.resize(adj_.size());
    h.alive_.assign(adj_.size(), 0);
    for (Vertex v : keep) {
        check(v);
        if (!h.alive_[v]) {
            h.alive_[v] = 1;
            ++h.live_;
        }
    }
    for (Vertex v = 0; v < adj_.size(); ++v) {
        if (!h.alive_[v]) continue;
        for (Vertex w : adj_[v])
            if (h.alive_[w]) h.adj_[v].push_back(w);
        h.edges_ += h.adj_[v].size();
    }
    h.edges_ /= 2;
    return h;
}

Graph Graph::without(std::span<const Vertex> drop) const {
    Graph h = *this;
    for (Vertex v : drop)
        if (h.contains(v)) h.remove_vertex(v);
    return h;
}

Graph Graph::without(Vertex v) const {
    Graph h = *this;
    h.remove_vertex(v);
    return h;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.vertices() == b.vertices() && a.edges() == b.edges();
}

Graph mutate(const Graph& g, const Mutation& op) {
    Graph h = g;
    std::visit(
        [&h](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, mutation::DeleteVertices>) {
                for (Vertex v : m.vertices)
                    if (!h.contains(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
                h.remove_vertices(m.vertices);
            } else if constexpr (std::is_same_v<T, mutation::DeleteEdges>) {
                for (const auto& e : m.edges) h.remove_edge(e.u, e.v);
            } else if constexpr (std::is_same_v<T, mutation::ContractEdge>) {
                if (!h.adjacent(m.keep, m.gone)) throw std::out_of_range("contracted pair is not an edge");
                h.contract(m.keep, m.gone);
            } else if constexpr (std::is_same_v<T, mutation::AddVertex>) {
                h.add_vertex();
            } else {
                h.add_edge(m.u, m.v);
            }
        },
        op);
    return h;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void normalize(VertexSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<Vertex> stack;
    for (Vertex s : g.vertices()) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::size_t count_components(const Graph& g) { return connected_components(g).size(); }

}  // namespace bpbvd
