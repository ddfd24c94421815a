#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goodlab/graph.hpp"
#include "goodlab/rational.hpp"

namespace goodlab {

/// Edge labels indexed by EdgeId of the graph they belong to. Ties allowed.
struct Labelling {
    std::vector<Rational> labels;

    const Rational& operator[](EdgeId e) const { return labels[e]; }
    std::size_t size() const noexcept { return labels.size(); }

    friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Throws ValidationError unless phi has exactly one label per edge of g.
void validate_labelling(const Graph& g, const Labelling& phi);

/// Dense order-preserving ranks: equal labels share a rank, ranks start at 0.
/// Every decision procedure here depends on labels only through these ranks.
std::vector<std::uint32_t> label_ranks(const Labelling& phi);

/// Labelling whose labels are the given integers.
Labelling labelling_from_ranks(const std::vector<std::uint64_t>& ranks);

// Labelling file: one "u v label" line per edge (any order, '#' comments);
// label is an integer, a decimal or "p/q". Every edge must appear exactly once.
Labelling parse_labelling(std::string_view text, const Graph& g);
std::string write_labelling(const Graph& g, const Labelling& phi);
Labelling read_labelling_file(const std::string& path, const Graph& g);

/// Label in file syntax: "p" for integers, "p/q" otherwise.
std::string label_text(const Rational& label);

using Walk = std::vector<Vertex>;

/// Consecutive vertices adjacent, no immediate backtracking, labels nondecreasing.
bool is_nice_walk(const Graph& g, const Labelling& phi, const Walk& walk);

/// Simple path of length >= 1 whose labels never decrease along the traversal.
bool is_nondecreasing_path(const Graph& g, const Labelling& phi, const Walk& path);

/// Number of directed nice k-walks; a walk and its reversal count separately.
///
/// Dynamic program over directed edges: the number of nice j-walks ending
/// with x->y is the sum, over in-edges w->x with w != y and label no larger
/// than that of xy, of the (j-1)-walk counts. Incident edges are sorted by
/// label per vertex so each step costs O(m log m).
BigInt count_nice_walks(const Graph& g, const Labelling& phi, std::size_t k);

inline constexpr std::uint64_t kDefaultPathCap = std::uint64_t{1} << 24;

struct PathEnumeration {
    Vertex source = 0;
    /// paths_to[v]: nondecreasing simple paths source -> v in DFS order
    /// (neighbors visited in increasing id order). paths_to[source] stays empty.
    std::vector<std::vector<Walk>> paths_to;
    std::uint64_t paths_explored = 0;
    bool truncated = false;
};

/// All nondecreasing simple paths out of `source`, stopping once `cap`
/// paths have been recorded (truncated is set if more exist).
PathEnumeration enumerate_nondecreasing_paths(const Graph& g, const Labelling& phi,
                                              Vertex source, std::uint64_t cap);

enum class Verdict { good, bad, inconclusive };

std::string to_string(Verdict v);

struct GoodnessWitness {
    Vertex from = 0;
    Vertex to = 0;
    Walk first;
    Walk second;
};

struct GoodnessVerdict {
    Verdict status = Verdict::good;
    std::optional<GoodnessWitness> witness;
    std::uint64_t paths_explored = 0;
    bool cap_hit = false;
};

/// Decides whether phi is a good labelling of g.
///
/// Each source vertex runs its own depth-first search over nondecreasing
/// paths and stops at the second path reaching any target; `cap` bounds the
/// paths explored per source. The verdict is bad if some source finds a
/// second path (the smallest such source supplies the witness), otherwise
/// inconclusive if some source hit its cap, otherwise good. The witness and
/// statistics do not depend on `threads` (0 = hardware concurrency).
GoodnessVerdict is_good(const Graph& g, const Labelling& phi,
                        std::uint64_t cap = kDefaultPathCap, unsigned threads = 1);

struct DuplicateWalks {
    Vertex from = 0;
    Vertex to = 0;
    Walk first;
    Walk second;
};

inline constexpr std::uint64_t kDefaultWalkBudget = std::uint64_t{1} << 26;

/// Two distinct nice k-walks with the same ordered endpoints, if any exist.
/// Walks are enumerated by start vertex then depth-first in neighbor order;
/// the first collision is returned. Throws BudgetError once more than
/// `budget` walks have been enumerated.
std::optional<DuplicateWalks> find_duplicate_nice_walks(const Graph& g, const Labelling& phi,
                                                        std::size_t k,
                                                        std::uint64_t budget = kDefaultWalkBudget);

}  // namespace goodlab
