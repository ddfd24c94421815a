#include "goodlab/generators.hpp"

#include <algorithm>
#include <unordered_set>

#include "goodlab/errors.hpp"
#include "goodlab/random.hpp"

namespace goodlab {

Graph make_path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    }
    return Graph(n, std::move(edges));
}

Graph make_cycle(std::size_t n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return Graph(n, std::move(edges));
}

Graph make_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw ValidationError("complete_bipartite needs both parts nonempty");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
    }
    return Graph(a + b, std::move(edges));
}

Graph make_hypercube(std::size_t dimension) {
    if (dimension > 24) throw ValidationError("hypercube dimension too large");
    const std::size_t n = std::size_t{1} << dimension;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (std::size_t bit = 0; bit < dimension; ++bit) {
            Vertex v = u ^ (Vertex{1} << bit);
            if (u < v) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph make_petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph make_random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                          std::size_t max_retries) {
    if ((n * d) % 2 != 0) throw ValidationError("random_regular needs n*d even");
    if (d >= n && !(n == 0 && d == 0)) throw ValidationError("random_regular needs d < n");

    Rng rng(seed);
    auto key = [n](Vertex a, Vertex b) {
        return static_cast<std::uint64_t>(std::min(a, b)) * n + std::max(a, b);
    };

    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Vertex> stubs;
        stubs.reserve(n * d);
        for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
        std::unordered_set<std::uint64_t> present;
        std::vector<Edge> edges;
        edges.reserve(n * d / 2);
        bool stuck = false;

        auto take = [&](std::size_t i, std::size_t j) {
            edges.push_back({stubs[i], stubs[j]});
            present.insert(key(stubs[i], stubs[j]));
            if (i < j) std::swap(i, j);  // remove the larger index first
            stubs[i] = stubs.back();
            stubs.pop_back();
            stubs[j] = stubs.back();
            stubs.pop_back();
        };
        auto admissible = [&](std::size_t i, std::size_t j) {
            return stubs[i] != stubs[j] && !present.contains(key(stubs[i], stubs[j]));
        };

        while (!stubs.empty()) {
            bool placed = false;
            for (int draw = 0; draw < 64 && !placed; ++draw) {
                std::size_t i = uniform_below(rng, stubs.size());
                std::size_t j = uniform_below(rng, stubs.size());
                if (i != j && admissible(i, j)) {
                    take(i, j);
                    placed = true;
                }
            }
            if (placed) continue;
            // Repeated rejection: fall back to an exhaustive list of admissible pairs.
            std::vector<std::pair<std::size_t, std::size_t>> options;
            for (std::size_t i = 0; i < stubs.size(); ++i) {
                for (std::size_t j = i + 1; j < stubs.size(); ++j) {
                    if (admissible(i, j)) options.emplace_back(i, j);
                }
            }
            if (options.empty()) {
                stuck = true;
                break;
            }
            auto [i, j] = options[uniform_below(rng, options.size())];
            take(i, j);
        }
        if (!stuck) return Graph(n, std::move(edges));
    }
    throw GenerationError("random_regular(" + std::to_string(n) + "," + std::to_string(d) +
                          ") failed after " + std::to_string(max_retries) + " attempts");
}

Graph make_random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    if (m > all.size()) throw ValidationError("too many edges for a simple graph");
    Rng rng(seed);
    shuffle(std::span<Edge>(all), rng);
    all.resize(m);
    return Graph(n, std::move(all));
}

Graph generate(const std::string& family, const std::vector<std::size_t>& params,
               std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw ValidationError("family '" + family + "' takes " + std::to_string(count) +
                                  " parameter(s)");
        }
    };
    if (family == "path") {
        need(1);
        return make_path(params[0]);
    }
    if (family == "cycle") {
        need(1);
        return make_cycle(params[0]);
    }
    if (family == "complete") {
        need(1);
        return make_complete(params[0]);
    }
    if (family == "complete_bipartite") {
        need(2);
        return make_complete_bipartite(params[0], params[1]);
    }
    if (family == "hypercube") {
        need(1);
        return make_hypercube(params[0]);
    }
    if (family == "random_regular") {
        need(2);
        return make_random_regular(params[0], params[1], seed);
    }
    if (family == "petersen") {
        need(0);
        return make_petersen();
    }
    throw ValidationError("unknown graph family '" + family + "'");
}

}  // namespace goodlab
