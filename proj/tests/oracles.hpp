#pragma once

// Brute-force reference implementations used only by tests. Each one takes a
// deliberately different route from the library code it checks.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodlab/graph.hpp"
#include "goodlab/random.hpp"
#include "goodlab/walks.hpp"

namespace oracle {

using goodlab::Graph;
using goodlab::Labelling;
using goodlab::Vertex;
using goodlab::Walk;

inline bool adjacent(const Graph& g, Vertex a, Vertex b) {
    for (const auto& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    }
    return false;
}

inline const goodlab::Rational& label(const Graph& g, const Labelling& phi, Vertex a, Vertex b) {
    for (goodlab::EdgeId id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return phi[id];
    }
    throw std::logic_error("not an edge");
}

/// Every vertex sequence of length k+1 over all n^(k+1) candidates, filtered
/// by the definition of a nice walk.
inline std::vector<Walk> all_nice_walks(const Graph& g, const Labelling& phi, std::size_t k) {
    std::vector<Walk> out;
    const std::size_t n = g.vertex_count();
    Walk w(k + 1, 0);
    auto check = [&] {
        for (std::size_t i = 1; i <= k; ++i) {
            if (!adjacent(g, w[i - 1], w[i])) return false;
        }
        for (std::size_t i = 1; i + 1 <= k; ++i) {
            if (w[i - 1] == w[i + 1]) return false;
            if (label(g, phi, w[i - 1], w[i]) > label(g, phi, w[i], w[i + 1])) return false;
        }
        return true;
    };
    // Odometer over all sequences, pruned only by adjacency of the prefix.
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == k + 1) {
            if (check()) out.push_back(w);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (pos > 0 && !adjacent(g, w[pos - 1], v)) continue;
            w[pos] = v;
            rec(pos + 1);
        }
    };
    if (n > 0) rec(0);
    return out;
}

/// All simple paths with at least one edge, in any order.
inline std::vector<Walk> all_simple_paths(const Graph& g) {
    std::vector<Walk> out;
    Walk path;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<void(Vertex)> rec = [&](Vertex v) {
        for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (used[w] || !adjacent(g, v, w)) continue;
            path.push_back(w);
            used[w] = 1;
            out.push_back(path);
            rec(w);
            used[w] = 0;
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        used[s] = 1;
        rec(s);
        used[s] = 0;
    }
    return out;
}

inline bool nondecreasing(const Graph& g, const Labelling& phi, const Walk& p) {
    for (std::size_t i = 2; i < p.size(); ++i) {
        if (label(g, phi, p[i - 2], p[i - 1]) > label(g, phi, p[i - 1], p[i])) return false;
    }
    return true;
}

/// Goodness by counting nondecreasing simple paths per ordered pair.
inline bool is_good(const Graph& g, const Labelling& phi) {
    std::map<std::pair<Vertex, Vertex>, int> count;
    for (const auto& p : all_simple_paths(g)) {
        if (nondecreasing(g, phi, p) && ++count[{p.front(), p.back()}] > 1) return false;
    }
    return true;
}

/// Simple paths of exactly k edges that are monotone in either direction,
/// counted once per undirected path.
inline std::uint64_t monotone_k_paths(const Graph& g, const Labelling& phi, std::size_t k) {
    std::uint64_t count = 0;
    for (const auto& p : all_simple_paths(g)) {
        if (p.size() != k + 1 || p.front() > p.back()) continue;
        Walk r(p.rbegin(), p.rend());
        if (nondecreasing(g, phi, p) || nondecreasing(g, phi, r)) ++count;
    }
    return count;
}

/// Screen by enumerating vertex subsets.
inline std::pair<bool, bool> forbidden(const Graph& g) {
    const Vertex n = static_cast<Vertex>(g.vertex_count());
    bool k3 = false;
    bool k23 = false;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (adjacent(g, a, b) && adjacent(g, b, c) && adjacent(g, a, c)) k3 = true;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = x + 1; y < n; ++y)
                    for (Vertex z = y + 1; z < n; ++z) {
                        std::set<Vertex> s{a, b, x, y, z};
                        if (s.size() != 5) continue;
                        bool all = true;
                        for (Vertex side : {a, b})
                            for (Vertex o : {x, y, z}) all = all && adjacent(g, side, o);
                        if (all) k23 = true;
                    }
    return {k3, k23};
}

/// Girth as min over edges uv of (distance from u to v without uv) + 1.
inline std::size_t girth(const Graph& g) {
    std::size_t best = goodlab::kInfiniteGirth;
    for (const auto& e : g.edges()) {
        std::vector<std::size_t> dist(g.vertex_count(), goodlab::kInfiniteGirth);
        std::vector<Vertex> queue{e.u};
        dist[e.u] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (const auto& inc : g.neighbors(x)) {
                if ((x == e.u && inc.neighbor == e.v) || (x == e.v && inc.neighbor == e.u)) continue;
                if (dist[inc.neighbor] == goodlab::kInfiniteGirth) {
                    dist[inc.neighbor] = dist[x] + 1;
                    queue.push_back(inc.neighbor);
                }
            }
        }
        if (dist[e.v] != goodlab::kInfiniteGirth) best = std::min(best, dist[e.v] + 1);
    }
    return best;
}

// ---- exact bound recursions on a second rational backend -------------------

using Q = boost::multiprecision::cpp_rational;

inline Q power(Q base, int e) {
    Q r = 1;
    if (e < 0) {
        base = Q(1) / base;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

struct AB {
    std::vector<Q> a;
    std::vector<Q> b;
};

/// a_1..a_t, b_1..b_t straight from the defining recurrences.
inline AB ab(int t, const Q& q) {
    const Q p = 1 - q;
    AB s{{Q(1)}, {Q(0)}};
    for (int k = 2; k <= t; ++k) {
        Q a_prev = s.a.back();
        Q b_prev = s.b.back();
        s.a.push_back(q * power(p, k - 2) * a_prev + 2 * q * q * power(p, k - 3));
        s.b.push_back(q * q * power(p, k - 2) * a_prev + q * power(p, k - 1) * b_prev +
                      q * q * power(p, k - 3));
    }
    return s;
}

inline Q g(const Q& n, const Q& m, const Q& d, int k, const Q& q) {
    AB s = ab(k, q);
    return s.a[k - 1] * m * power(d, k - 1) - s.b[k - 1] * n * power(d, k);
}

inline std::string str(const Q& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

// ---- random instances ------------------------------------------------------

inline Labelling random_weak_labelling(const Graph& g, goodlab::Rng& rng, std::uint64_t levels) {
    Labelling phi;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        phi.labels.emplace_back(static_cast<long long>(goodlab::uniform_below(rng, levels)));
    }
    return phi;
}

}  // namespace oracle
