#include <algorithm>

#include "goodlab/errors.hpp"
#include "goodlab/walks.hpp"

namespace goodlab {

namespace {

// Directed edge 2e runs edge(e).u -> edge(e).v, 2e+1 runs the other way.
std::size_t directed(const Graph& g, EdgeId e, Vertex from) {
    return 2 * static_cast<std::size_t>(e) + (g.edge(e).u == from ? 0 : 1);
}

}  // namespace

BigInt count_nice_walks(const Graph& g, const Labelling& phi, std::size_t k) {
    if (k < 1) throw ValidationError("walk length must be at least 1");
    validate_labelling(g, phi);
    const auto rank = label_ranks(phi);
    const std::size_t n = g.vertex_count();

    // Incident edges of each vertex sorted by label rank.
    std::vector<std::vector<Incidence>> by_rank(n);
    for (Vertex x = 0; x < n; ++x) {
        auto adj = g.neighbors(x);
        by_rank[x].assign(adj.begin(), adj.end());
        std::stable_sort(by_rank[x].begin(), by_rank[x].end(),
                         [&](const Incidence& a, const Incidence& b) {
                             return rank[a.edge] < rank[b.edge];
                         });
    }

    std::vector<BigInt> count(2 * g.edge_count(), BigInt(1));
    std::vector<BigInt> next(count.size());
    std::vector<BigInt> prefix;
    for (std::size_t step = 1; step < k; ++step) {
        for (Vertex x = 0; x < n; ++x) {
            const auto& inc = by_rank[x];
            // prefix[i] = sum of counts of in-edges w->x over the first i incidences.
            prefix.assign(inc.size() + 1, BigInt(0));
            for (std::size_t i = 0; i < inc.size(); ++i) {
                prefix[i + 1] = prefix[i] + count[directed(g, inc[i].edge, inc[i].neighbor)];
            }
            std::size_t hi = 0;
            for (std::size_t i = 0; i < inc.size(); ++i) {
                // Advance hi past every incidence whose rank is <= rank of inc[i].
                hi = std::max(hi, i);
                while (hi < inc.size() && rank[inc[hi].edge] <= rank[inc[i].edge]) ++hi;
                const BigInt& reverse = count[directed(g, inc[i].edge, inc[i].neighbor)];
                next[directed(g, inc[i].edge, x)] = prefix[hi] - reverse;
            }
        }
        std::swap(count, next);
    }

    BigInt total = 0;
    for (const BigInt& c : count) total += c;
    return total;
}

namespace {

struct PathSearch {
    const Graph& g;
    const std::vector<std::uint32_t>& rank;
    std::uint64_t cap;
    PathEnumeration& out;
    std::vector<char> visited;
    Walk path;

    void dfs(Vertex v, std::uint32_t min_rank) {
        for (const Incidence& inc : g.neighbors(v)) {
            if (out.truncated) return;
            if (visited[inc.neighbor] || rank[inc.edge] < min_rank) continue;
            if (out.paths_explored == cap) {
                out.truncated = true;
                return;
            }
            path.push_back(inc.neighbor);
            ++out.paths_explored;
            out.paths_to[inc.neighbor].push_back(path);
            visited[inc.neighbor] = 1;
            dfs(inc.neighbor, rank[inc.edge]);
            visited[inc.neighbor] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

PathEnumeration enumerate_nondecreasing_paths(const Graph& g, const Labelling& phi,
                                              Vertex source, std::uint64_t cap) {
    validate_labelling(g, phi);
    if (source >= g.vertex_count()) throw RangeError("source vertex out of range");
    const auto rank = label_ranks(phi);
    PathEnumeration result;
    result.source = source;
    result.paths_to.resize(g.vertex_count());
    PathSearch search{g, rank, cap, result, std::vector<char>(g.vertex_count(), 0), {source}};
    search.visited[source] = 1;
    search.dfs(source, 0);
    return result;
}

namespace {

struct WalkSearch {
    const Graph& g;
    const std::vector<std::uint32_t>& rank;
    std::size_t k;
    std::uint64_t budget;
    std::uint64_t enumerated = 0;
    std::vector<std::optional<Walk>> first_by_end;
    Walk walk;
    std::optional<DuplicateWalks> found;

    void extend(Vertex v, Vertex previous, std::uint32_t min_rank) {
        for (const Incidence& inc : g.neighbors(v)) {
            if (found) return;
            if (inc.neighbor == previous || rank[inc.edge] < min_rank) continue;
            walk.push_back(inc.neighbor);
            if (walk.size() == k + 1) {
                if (++enumerated > budget) {
                    throw BudgetError("nice-walk enumeration exceeded budget of " +
                                      std::to_string(budget) + " walks");
                }
                auto& slot = first_by_end[inc.neighbor];
                if (slot) {
                    found = DuplicateWalks{walk.front(), inc.neighbor, *slot, walk};
                } else {
                    slot = walk;
                }
            } else {
                extend(inc.neighbor, v, rank[inc.edge]);
            }
            walk.pop_back();
        }
    }
};

}  // namespace

std::optional<DuplicateWalks> find_duplicate_nice_walks(const Graph& g, const Labelling& phi,
                                                        std::size_t k, std::uint64_t budget) {
    if (k < 1) throw ValidationError("walk length must be at least 1");
    validate_labelling(g, phi);
    const auto rank = label_ranks(phi);
    constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
    WalkSearch search{g, rank, k, budget, 0, {}, {}, std::nullopt};
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        search.first_by_end.assign(g.vertex_count(), std::nullopt);
        search.walk = {start};
        search.extend(start, kNoVertex, 0);
        if (search.found) return search.found;
    }
    return std::nullopt;
}

}  // namespace goodlab
