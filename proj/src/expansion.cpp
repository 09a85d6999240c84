#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "bpbvd/kernel.hpp"

namespace bpbvd {

namespace {

// Adjacency between positions in x and positions in y.
struct Bipartite {
    std::vector<std::vector<std::size_t>> x_adj;
    std::vector<std::vector<std::size_t>> y_adj;
};

Bipartite index(const VertexSet& x, const VertexSet& y, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Bipartite b;
    b.x_adj.resize(x.size());
    b.y_adj.resize(y.size());
    for (auto [u, w] : edges) {
        auto xi = std::lower_bound(x.begin(), x.end(), u);
        auto yi = std::lower_bound(y.begin(), y.end(), w);
        if (xi == x.end() || *xi != u || yi == y.end() || *yi != w)
            throw std::invalid_argument("expansion: edge endpoint outside the bipartition");
        b.x_adj[xi - x.begin()].push_back(yi - y.begin());
        b.y_adj[yi - y.begin()].push_back(xi - x.begin());
    }
    for (auto* side : {&b.x_adj, &b.y_adj})
        for (auto& l : *side) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    return b;
}

}  // namespace

ExpansionResult expansion(const VertexSet& x_in, const VertexSet& y_in,
                          const std::vector<std::pair<Vertex, Vertex>>& edges, int alpha) {
    VertexSet x = x_in, y = y_in;
    normalize(x);
    normalize(y);
    if (alpha < 1) throw std::invalid_argument("expansion: alpha must be positive");
    if (x.empty()) throw std::invalid_argument("expansion: X is empty");
    if (y.size() < static_cast<std::size_t>(alpha) * x.size())
        throw std::invalid_argument("expansion: |Y| < alpha |X|");
    const Bipartite b = index(x, y, edges);
    for (const auto& l : b.y_adj)
        if (l.empty()) throw std::invalid_argument("expansion: a Y vertex has no neighbour in X");

    const std::size_t a = static_cast<std::size_t>(alpha);
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<char> x_live(x.size(), 1), y_live(y.size(), 1);

    while (true) {
        // Kuhn matching from alpha copies of every live x into live y.
        std::vector<std::size_t> match_y(y.size(), none);  // y -> copy id (xi * a + c)
        std::vector<std::size_t> match_copy(x.size() * a, none);
        std::vector<char> visited;
        std::function<bool(std::size_t)> augment = [&](std::size_t copy) {
            for (std::size_t yi : b.x_adj[copy / a]) {
                if (!y_live[yi] || visited[yi]) continue;
                visited[yi] = 1;
                if (match_y[yi] == none || augment(match_y[yi])) {
                    match_y[yi] = copy;
                    match_copy[copy] = yi;
                    return true;
                }
            }
            return false;
        };
        bool saturated = true;
        for (std::size_t xi = 0; xi < x.size(); ++xi) {
            if (!x_live[xi]) continue;
            for (std::size_t c = 0; c < a; ++c) {
                visited.assign(y.size(), 0);
                if (!augment(xi * a + c)) saturated = false;
            }
        }

        if (saturated) {
            ExpansionResult out;
            for (std::size_t xi = 0; xi < x.size(); ++xi) {
                if (!x_live[xi]) continue;
                out.x_prime.push_back(x[xi]);
                auto& img = out.phi[x[xi]];
                for (std::size_t c = 0; c < a; ++c) img.push_back(y[match_copy[xi * a + c]]);
                normalize(img);
            }
            for (std::size_t yi = 0; yi < y.size(); ++yi)
                if (y_live[yi]) out.y_prime.push_back(y[yi]);
            return out;
        }

        // Everything reachable from an unmatched copy by alternating paths is dropped.
        std::vector<char> x_reach(x.size(), 0), y_reach(y.size(), 0);
        std::vector<std::size_t> stack;
        for (std::size_t xi = 0; xi < x.size(); ++xi)
            if (x_live[xi])
                for (std::size_t c = 0; c < a; ++c)
                    if (match_copy[xi * a + c] == none && !x_reach[xi]) {
                        x_reach[xi] = 1;
                        stack.push_back(xi);
                    }
        while (!stack.empty()) {
            std::size_t xi = stack.back();
            stack.pop_back();
            for (std::size_t yi : b.x_adj[xi]) {
                if (!y_live[yi] || y_reach[yi]) continue;
                y_reach[yi] = 1;
                if (match_y[yi] != none) {
                    std::size_t xo = match_y[yi] / a;
                    if (!x_reach[xo]) {
                        x_reach[xo] = 1;
                        stack.push_back(xo);
                    }
                }
            }
        }
        bool any_left = false;
        for (std::size_t xi = 0; xi < x.size(); ++xi) {
            if (x_reach[xi]) x_live[xi] = 0;
            any_left = any_left || x_live[xi];
        }
        for (std::size_t yi = 0; yi < y.size(); ++yi)
            if (y_reach[yi]) y_live[yi] = 0;
        if (!any_left) throw std::logic_error("expansion: no expansion found");
    }
}

std::string check_expansion(const VertexSet& x_in, const VertexSet& y_in,
                            const std::vector<std::pair<Vertex, Vertex>>& edges, int alpha,
                            const ExpansionResult& r) {
    VertexSet x = x_in, y = y_in;
    normalize(x);
    normalize(y);
    if (r.x_prime.empty() || r.y_prime.empty()) return "X' or Y' is empty";
    if (!std::is_sorted(r.x_prime.begin(), r.x_prime.end()) || !std::is_sorted(r.y_prime.begin(), r.y_prime.end()))
        return "X' or Y' not sorted";
    VertexSet n_y;
    for (auto [u, w] : edges)
        if (set_contains(r.y_prime, w)) n_y.push_back(u);
    normalize(n_y);
    if (n_y != r.x_prime) return "N(Y') ∩ X differs from X'";
    VertexSet used;
    for (Vertex xv : r.x_prime) {
        auto it = r.phi.find(xv);
        if (it == r.phi.end() || it->second.size() != static_cast<std::size_t>(alpha)) return "phi(x) has wrong size";
        for (Vertex yv : it->second) {
            if (!set_contains(r.y_prime, yv)) return "phi(x) leaves Y'";
            if (std::find(edges.begin(), edges.end(), std::make_pair(xv, yv)) == edges.end())
                return "phi(x) is not inside N(x)";
            used.push_back(yv);
        }
    }
    const std::size_t total = used.size();
    normalize(used);
    if (used.size() != total) return "phi images overlap";
    return {};
}

}  // namespace bpbvd
