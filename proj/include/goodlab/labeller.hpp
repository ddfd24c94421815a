#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "goodlab/graph.hpp"
#include "goodlab/walks.hpp"

namespace goodlab {

/// Uniformly random permutation of the ranks 1..m over the edges. Only the
/// relative order of labels matters to goodness, so this is order-equivalent
/// to independent uniform reals.
Labelling random_labelling(const Graph& g, std::uint64_t seed);

struct LabelledGraph {
    Graph graph;
    Labelling labelling;
};

/// Q_d with every edge labelled by the 1-based index of the coordinate it flips.
/// The only nondecreasing u->v path flips the differing coordinates in
/// increasing order, so the labelling is good.
LabelledGraph hypercube_labelling(std::size_t dimension);

struct ResampleStats {
    std::uint64_t rounds = 0;          ///< resampling events performed
    bool terminated = false;           ///< no monotone k-path remains
    std::uint64_t remaining_paths = 0; ///< monotone k-paths left in the returned labelling
};

struct ResampleResult {
    Labelling labelling;
    ResampleStats stats;
};

/// First simple path of length exactly k (in lexicographic order of vertex
/// sequences) whose labels are monotone, i.e. nondecreasing when read in one
/// of its two traversal directions.
std::optional<Walk> first_monotone_path(const Graph& g, const Labelling& phi, std::size_t k);

/// Number of simple k-paths, each counted once regardless of direction,
/// whose labels are monotone.
std::uint64_t count_monotone_paths(const Graph& g, const Labelling& phi, std::size_t k);

/// Moser-Tardos style resampler for the bad events "this k-path is monotone".
///
/// Labels start as independent uniform 64-bit values. While a monotone
/// k-path exists, the lexicographically first one has its k labels redrawn.
/// Stops after max_rounds resamplings. The returned labelling is the final
/// state converted to ranks 1..m. When girth(g) >= 2k a terminated run is a
/// good labelling. Throws PreconditionError if girth(g) < 2k unless
/// allow_low_girth is set, and ValidationError if k or max_rounds is 0.
ResampleResult mt_label(const Graph& g, std::size_t k, std::uint64_t seed,
                        std::uint64_t max_rounds, bool allow_low_girth = false);

/// Labelling assigning ranks 1..m to edges 0..m-1 in the order given by the
/// `index`-th permutation (lexicographic, 0-based) of {1..m}. index < m!.
Labelling ordering_labelling(std::size_t m, std::uint64_t index);

/// m! or nullopt when it exceeds 64 bits.
std::optional<std::uint64_t> ordering_count(std::size_t m);

enum class ExhaustiveStatus { good, bad, budget_exceeded };

std::string to_string(ExhaustiveStatus s);

struct ExhaustiveResult {
    ExhaustiveStatus status = ExhaustiveStatus::bad;
    std::optional<Labelling> witness;  ///< first good ordering in enumeration order
    std::uint64_t orderings_checked = 0;
};

inline constexpr std::uint64_t kDefaultOrderingBudget = 10'000'000;

/// Decides goodness of g by trying every injective labelling, i.e. every
/// ordering of the ranks 1..m. Injective labellings suffice: refining ties of
/// a good labelling only removes nondecreasing paths. Stops at the first good
/// ordering; budget_exceeded if `budget` orderings were tried without an
/// answer (or an is_good call ran out of its path cap).
ExhaustiveResult exhaustive_decide_good(const Graph& g,
                                        std::uint64_t budget = kDefaultOrderingBudget,
                                        unsigned threads = 1);

struct GammaEntry {
    std::size_t n = 0;
    std::size_t gamma = 0;
    Graph witness_graph;
    Labelling witness_labelling;
    std::uint64_t graphs_screened_out = 0;  ///< rejected by the K3 / K2,3 screen
    std::uint64_t graphs_decided = 0;       ///< passed to exhaustive_decide_good
};

inline constexpr std::size_t kDefaultGammaCap = 5;

/// Maximum edge count of a good graph on n vertices, by exhaustive search
/// over labelled graphs with m = floor(n^2/4), floor(n^2/4) - 1, ... edges
/// (anything denser contains a triangle). Throws ValidationError for n > cap.
GammaEntry gamma(std::size_t n, std::size_t cap = kDefaultGammaCap, unsigned threads = 1);

}  // namespace goodlab
