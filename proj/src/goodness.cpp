#include <algorithm>

#include "goodlab/parallel.hpp"
#include "goodlab/walks.hpp"

namespace goodlab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::good: return "good";
        case Verdict::bad: return "bad";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

struct SourceResult {
    std::uint64_t explored = 0;
    bool cap_hit = false;
    std::optional<GoodnessWitness> witness;
};

// DFS from one source that stops at the second nondecreasing path into any target.
class SourceSearch {
public:
    SourceSearch(const Graph& g, const std::vector<std::uint32_t>& rank, std::uint64_t cap)
        : g_(g), rank_(rank), cap_(cap), visited_(g.vertex_count(), 0),
          first_path_(g.vertex_count()) {}

    SourceResult run(Vertex source) {
        result_ = {};
        std::fill(visited_.begin(), visited_.end(), 0);
        for (auto& p : first_path_) p.clear();
        path_ = {source};
        visited_[source] = 1;
        dfs(source, 0);
        return std::move(result_);
    }

private:
    bool done() const { return result_.cap_hit || result_.witness.has_value(); }

    void dfs(Vertex v, std::uint32_t min_rank) {
        for (const Incidence& inc : g_.neighbors(v)) {
            if (done()) return;
            const Vertex w = inc.neighbor;
            if (visited_[w] || rank_[inc.edge] < min_rank) continue;
            if (result_.explored == cap_) {
                result_.cap_hit = true;
                return;
            }
            ++result_.explored;
            path_.push_back(w);
            if (first_path_[w].empty()) {
                first_path_[w] = path_;
            } else {
                Walk a = first_path_[w];
                Walk b = path_;
                auto shorter_first = [](const Walk& x, const Walk& y) {
                    return x.size() != y.size() ? x.size() < y.size() : x < y;
                };
                if (shorter_first(b, a)) std::swap(a, b);
                result_.witness = GoodnessWitness{path_.front(), w, std::move(a), std::move(b)};
                path_.pop_back();
                return;
            }
            visited_[w] = 1;
            dfs(w, rank_[inc.edge]);
            visited_[w] = 0;
            path_.pop_back();
        }
    }

    const Graph& g_;
    const std::vector<std::uint32_t>& rank_;
    std::uint64_t cap_;
    std::vector<char> visited_;
    std::vector<Walk> first_path_;
    Walk path_;
    SourceResult result_;
};

}  // namespace

GoodnessVerdict is_good(const Graph& g, const Labelling& phi, std::uint64_t cap,
                        unsigned threads) {
    validate_labelling(g, phi);
    const auto rank = label_ranks(phi);
    const std::size_t n = g.vertex_count();
    std::vector<SourceResult> results(n);

    auto search_source = [&](std::size_t s) {
        // One searcher per call keeps workers independent.
        SourceSearch search(g, rank, cap);
        results[s] = search.run(static_cast<Vertex>(s));
        return results[s].witness.has_value();
    };
    auto first_bad = parallel_find_first(n, threads, search_source);

    GoodnessVerdict verdict;
    const std::size_t last = first_bad ? *first_bad + 1 : n;
    for (std::size_t s = 0; s < last; ++s) {
        verdict.paths_explored += results[s].explored;
        verdict.cap_hit = verdict.cap_hit || results[s].cap_hit;
    }
    if (first_bad) {
        verdict.status = Verdict::bad;
        verdict.witness = results[*first_bad].witness;
    } else {
        verdict.status = verdict.cap_hit ? Verdict::inconclusive : Verdict::good;
    }
    return verdict;
}

}  // namespace goodlab
