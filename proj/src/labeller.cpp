#include "goodlab/labeller.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>

#include "goodlab/errors.hpp"
#include "goodlab/generators.hpp"
#include "goodlab/random.hpp"

namespace goodlab {

Labelling random_labelling(const Graph& g, std::uint64_t seed) {
    std::vector<std::uint64_t> ranks(g.edge_count());
    std::iota(ranks.begin(), ranks.end(), std::uint64_t{1});
    Rng rng(seed);
    shuffle(std::span<std::uint64_t>(ranks), rng);
    return labelling_from_ranks(ranks);
}

LabelledGraph hypercube_labelling(std::size_t dimension) {
    LabelledGraph out{make_hypercube(dimension), {}};
    out.labelling.labels.reserve(out.graph.edge_count());
    for (const Edge& e : out.graph.edges()) {
        const auto flipped = static_cast<unsigned>(std::countr_zero(e.u ^ e.v));
        out.labelling.labels.emplace_back(flipped + 1);
    }
    return out;
}

namespace {

// Depth-first scan of simple k-paths whose label sequence is monotone.
// Paths are produced in lexicographic order of their vertex sequences.
class MonotoneScan {
public:
    MonotoneScan(const Graph& g, std::span<const std::uint64_t> value, std::size_t k)
        : g_(g), value_(value), k_(k), on_path_(g.vertex_count(), 0) {}

    std::optional<Walk> first() {
        stop_at_first_ = true;
        run();
        if (hits_ == 0) return std::nullopt;
        return first_;
    }

    // Each undirected path is met once per orientation.
    std::uint64_t count() {
        stop_at_first_ = false;
        run();
        return hits_ / 2;
    }

private:
    void run() {
        hits_ = 0;
        for (Vertex s = 0; s < g_.vertex_count(); ++s) {
            path_ = {s};
            on_path_[s] = 1;
            extend(s, 0, true, true);
            on_path_[s] = 0;
            if (stop_at_first_ && hits_ > 0) return;
        }
    }

    void extend(Vertex v, std::uint64_t last, bool up, bool down) {
        for (const Incidence& inc : g_.neighbors(v)) {
            if (stop_at_first_ && hits_ > 0) return;
            if (on_path_[inc.neighbor]) continue;
            const std::uint64_t x = value_[inc.edge];
            const bool first_edge = path_.size() == 1;
            const bool next_up = first_edge || (up && x >= last);
            const bool next_down = first_edge || (down && x <= last);
            if (!next_up && !next_down) continue;
            path_.push_back(inc.neighbor);
            if (path_.size() == k_ + 1) {
                if (hits_++ == 0) first_ = path_;
            } else {
                on_path_[inc.neighbor] = 1;
                extend(inc.neighbor, x, next_up, next_down);
                on_path_[inc.neighbor] = 0;
            }
            path_.pop_back();
        }
    }

    const Graph& g_;
    std::span<const std::uint64_t> value_;
    std::size_t k_;
    std::vector<char> on_path_;
    Walk path_;
    Walk first_;
    std::uint64_t hits_ = 0;
    bool stop_at_first_ = true;
};

std::vector<std::uint64_t> widened_ranks(const Labelling& phi) {
    auto ranks = label_ranks(phi);
    return {ranks.begin(), ranks.end()};
}

std::vector<std::uint64_t> one_based_ranks(const std::vector<std::uint64_t>& values) {
    Labelling raw;
    raw.labels.reserve(values.size());
    for (std::uint64_t v : values) raw.labels.emplace_back(BigInt(v));
    auto ranks = label_ranks(raw);
    std::vector<std::uint64_t> out(ranks.size());
    std::transform(ranks.begin(), ranks.end(), out.begin(),
                   [](std::uint32_t r) { return std::uint64_t{r} + 1; });
    return out;
}

}  // namespace

std::optional<Walk> first_monotone_path(const Graph& g, const Labelling& phi, std::size_t k) {
    validate_labelling(g, phi);
    if (k < 1) throw ValidationError("path length must be at least 1");
    auto values = widened_ranks(phi);
    return MonotoneScan(g, values, k).first();
}

std::uint64_t count_monotone_paths(const Graph& g, const Labelling& phi, std::size_t k) {
    validate_labelling(g, phi);
    if (k < 1) throw ValidationError("path length must be at least 1");
    auto values = widened_ranks(phi);
    return MonotoneScan(g, values, k).count();
}

ResampleResult mt_label(const Graph& g, std::size_t k, std::uint64_t seed,
                        std::uint64_t max_rounds, bool allow_low_girth) {
    if (k < 1) throw ValidationError("k must be at least 1");
    if (max_rounds < 1) throw ValidationError("max_rounds must be at least 1");
    if (!allow_low_girth) {
        const std::size_t gth = girth(g);
        if (gth != kInfiniteGirth && gth < 2 * k) {
            throw PreconditionError("girth " + std::to_string(gth) + " is below 2k = " +
                                    std::to_string(2 * k));
        }
    }

    Rng rng(seed);
    std::vector<std::uint64_t> value(g.edge_count());
    for (auto& v : value) v = rng();

    ResampleStats stats;
    for (;;) {
        auto bad = MonotoneScan(g, value, k).first();
        if (!bad) {
            stats.terminated = true;
            break;
        }
        if (stats.rounds == max_rounds) break;
        for (std::size_t i = 1; i < bad->size(); ++i) {
            value[*g.edge_id((*bad)[i - 1], (*bad)[i])] = rng();
        }
        ++stats.rounds;
    }
    stats.remaining_paths = stats.terminated ? 0 : MonotoneScan(g, value, k).count();
    return {labelling_from_ranks(one_based_ranks(value)), stats};
}

}  // namespace goodlab
