#include "goodlab/graph.hpp"

#include <algorithm>
#include <queue>

#include "goodlab/errors.hpp"

namespace goodlab {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            throw RangeError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} references a vertex outside [0," + std::to_string(n_) + ")");
        }
        if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw ValidationError("duplicate edge {" + std::to_string(dup->u) + "," +
                              std::to_string(dup->v) + "}");
    }

    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    incidences_.resize(offsets_[n_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        incidences_[cursor[e.u]++] = {e.v, id};
        incidences_[cursor[e.v]++] = {e.u, id};
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(incidences_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  incidences_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
                  [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    auto adj = neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
    if (it == adj.end() || it->neighbor != v) return std::nullopt;
    return it->edge;
}

std::size_t girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = kInfiniteGirth;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::queue<Vertex> frontier;

    // BFS from every root; the shortest cycle through a root is found when a
    // non-tree edge closes two BFS branches.
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInfiniteGirth);
        dist[root] = 0;
        parent[root] = root;
        frontier = {};
        frontier.push(root);
        while (!frontier.empty()) {
            Vertex x = frontier.front();
            frontier.pop();
            if (2 * dist[x] + 1 >= best) break;
            for (const Incidence& inc : g.neighbors(x)) {
                Vertex y = inc.neighbor;
                if (dist[y] == kInfiniteGirth) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    frontier.push(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

DegreeStats degree_stats(const Graph& g) {
    if (g.vertex_count() == 0) throw ValidationError("degree statistics of the empty graph");
    DegreeStats stats;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        stats.max_degree = std::max(stats.max_degree, g.degree(v));
    }
    stats.edge_count = g.edge_count();
    stats.avg_degree = Rational(BigInt(2 * g.edge_count()), BigInt(g.vertex_count()));
    return stats;
}

namespace {

std::size_t common_neighbors(const Graph& g, Vertex a, Vertex b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::size_t count = 0;
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
        if (i->neighbor < j->neighbor) {
            ++i;
        } else if (j->neighbor < i->neighbor) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

ForbiddenScreen forbidden_screen(const Graph& g) {
    ForbiddenScreen screen;
    for (const Edge& e : g.edges()) {
        if (common_neighbors(g, e.u, e.v) > 0) {
            screen.contains_k3 = true;
            break;
        }
    }
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex a = 0; a < n && !screen.contains_k23; ++a) {
        if (g.degree(a) < 3) continue;
        for (Vertex b = a + 1; b < n; ++b) {
            if (common_neighbors(g, a, b) >= 3) {
                screen.contains_k23 = true;
                break;
            }
        }
    }
    return screen;
}

}  // namespace goodlab
