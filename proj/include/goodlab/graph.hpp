#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goodlab/rational.hpp"

namespace goodlab {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically and an edge's id is its index in
/// that order, so two graphs with the same edge set agree on every id. The
/// adjacency of each vertex is sorted by neighbor id.
class Graph {
public:
    Graph() = default;

    /// Throws ValidationError on self-loops or parallel edges and RangeError
    /// on vertex ids outside [0, n). Edge endpoints may be given in either order.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    std::span<const Incidence> neighbors(Vertex v) const {
        return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Incidence> incidences_;
};

// ---- edge-list text format -------------------------------------------------
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, 0 <= u, v < n)

Graph parse_graph(std::string_view text);

/// Canonical document: header "n m", then edges with u < v in sorted order,
/// newline-separated without a trailing newline.
std::string write_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

// ---- structural statistics -------------------------------------------------

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

/// Length of a shortest cycle, or kInfiniteGirth for forests.
std::size_t girth(const Graph& g);

struct DegreeStats {
    std::size_t max_degree = 0;
    Rational avg_degree;
    std::size_t edge_count = 0;
};

/// Throws ValidationError when the graph has no vertices.
DegreeStats degree_stats(const Graph& g);

struct ForbiddenScreen {
    bool contains_k3 = false;
    bool contains_k23 = false;

    bool certifies_bad() const noexcept { return contains_k3 || contains_k23; }
};

/// K3: some edge whose endpoints share a neighbor. K2,3: some vertex pair
/// with at least three common neighbors.
ForbiddenScreen forbidden_screen(const Graph& g);

}  // namespace goodlab
