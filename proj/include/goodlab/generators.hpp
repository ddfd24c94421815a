#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "goodlab/graph.hpp"

namespace goodlab {

/// Path on n vertices (n - 1 edges).
Graph make_path(std::size_t n);
/// Cycle on n >= 3 vertices.
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}; a, b >= 1.
Graph make_complete_bipartite(std::size_t a, std::size_t b);
/// Q_d on 2^d vertices; u ~ v iff their ids differ in exactly one bit.
Graph make_hypercube(std::size_t dimension);
Graph make_petersen();

inline constexpr std::size_t kDefaultRegularRetries = 1000;

/// Random d-regular simple graph on n vertices.
///
/// Configuration-model pairing with rejection: n*d half-edges are matched
/// one random pair at a time and any pair that would create a loop or a
/// parallel edge is rejected and redrawn. When no admissible pair remains
/// the attempt is discarded and pairing restarts; after `max_retries`
/// discarded attempts a GenerationError is thrown. Requires n*d even and d < n.
Graph make_random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                          std::size_t max_retries = kDefaultRegularRetries);

/// Erdos-Renyi G(n, m): m distinct edges drawn uniformly.
Graph make_random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Dispatch used by the CLI: family names path, cycle, complete,
/// complete_bipartite, hypercube, random_regular, petersen.
Graph generate(const std::string& family, const std::vector<std::size_t>& params,
               std::uint64_t seed);

}  // namespace goodlab
