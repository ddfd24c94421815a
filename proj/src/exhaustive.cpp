#include <atomic>

#include "goodlab/errors.hpp"
#include "goodlab/labeller.hpp"
#include "goodlab/parallel.hpp"

namespace goodlab {

std::string to_string(ExhaustiveStatus s) {
    switch (s) {
        case ExhaustiveStatus::good: return "good";
        case ExhaustiveStatus::bad: return "bad";
        case ExhaustiveStatus::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

std::optional<std::uint64_t> ordering_count(std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 2; i <= m; ++i) {
        if (total > UINT64_MAX / i) return std::nullopt;
        total *= i;
    }
    return total;
}

Labelling ordering_labelling(std::size_t m, std::uint64_t index) {
    // Factorial-base digits select the next rank among those still unused.
    std::vector<std::uint64_t> pool(m);
    for (std::size_t i = 0; i < m; ++i) pool[i] = i + 1;
    std::vector<std::uint64_t> digits(m);
    for (std::size_t radix = 1; radix <= m; ++radix) {
        digits[m - radix] = index % radix;
        index /= radix;
    }
    if (index != 0) throw ValidationError("ordering index out of range");
    std::vector<std::uint64_t> ranks;
    ranks.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ranks.push_back(pool[digits[i]]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
    }
    return labelling_from_ranks(ranks);
}

ExhaustiveResult exhaustive_decide_good(const Graph& g, std::uint64_t budget, unsigned threads) {
    const std::size_t m = g.edge_count();
    const auto total = ordering_count(m);
    const std::uint64_t limit = total ? std::min(*total, budget) : budget;
    std::atomic<bool> inconclusive{false};

    auto found = parallel_find_first(limit, threads, [&](std::size_t index) {
        const auto verdict = is_good(g, ordering_labelling(m, index));
        if (verdict.status == Verdict::inconclusive) inconclusive = true;
        return verdict.status == Verdict::good;
    });

    ExhaustiveResult result;
    if (found) {
        result.status = ExhaustiveStatus::good;
        result.witness = ordering_labelling(m, *found);
        result.orderings_checked = *found + 1;
        return result;
    }
    result.orderings_checked = limit;
    const bool exhausted = total && limit == *total;
    result.status = exhausted && !inconclusive ? ExhaustiveStatus::bad
                                               : ExhaustiveStatus::budget_exceeded;
    return result;
}

namespace {

void combinations(const std::vector<Edge>& pool, std::size_t want, std::size_t from,
                  std::vector<Edge>& current, std::vector<std::vector<Edge>>& out) {
    if (current.size() == want) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = from; i + (want - current.size()) <= pool.size(); ++i) {
        current.push_back(pool[i]);
        combinations(pool, want, i + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

GammaEntry gamma(std::size_t n, std::size_t cap, unsigned threads) {
    if (n > cap) {
        throw ValidationError("gamma(" + std::to_string(n) + ") exceeds the search cap of " +
                              std::to_string(cap));
    }
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }

    GammaEntry entry;
    entry.n = n;
    for (std::size_t m = n * n / 4 + 1; m-- > 0;) {
        std::vector<std::vector<Edge>> candidates;
        std::vector<Edge> scratch;
        combinations(pairs, m, 0, scratch, candidates);

        std::vector<Graph> graphs;
        for (auto& edges : candidates) {
            Graph g(n, std::move(edges));
            if (forbidden_screen(g).certifies_bad()) {
                ++entry.graphs_screened_out;
            } else {
                graphs.push_back(std::move(g));
            }
        }

        std::vector<ExhaustiveResult> results(graphs.size());
        std::atomic<bool> over_budget{false};
        auto first_good = parallel_find_first(graphs.size(), threads, [&](std::size_t i) {
            results[i] = exhaustive_decide_good(graphs[i]);
            if (results[i].status == ExhaustiveStatus::budget_exceeded) over_budget = true;
            return results[i].status == ExhaustiveStatus::good;
        });
        if (over_budget && !first_good) {
            throw BudgetError("exhaustive search budget exceeded while computing gamma");
        }
        entry.graphs_decided += first_good ? *first_good + 1 : graphs.size();
        if (first_good) {
            entry.gamma = m;
            entry.witness_graph = graphs[*first_good];
            entry.witness_labelling = *results[*first_good].witness;
            return entry;
        }
    }
    throw std::logic_error("no good graph found, but the empty graph is good");
}

}  // namespace goodlab
