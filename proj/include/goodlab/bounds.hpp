#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "goodlab/rational.hpp"

namespace goodlab {

/// (t, c, q') with q = 2^-q' and p = 1 - q. q' >= 2 keeps q inside (0, 1/2).
struct BoundParams {
    std::size_t t = 1;
    std::size_t c = 1;
    long q_prime = 2;

    Rational q() const { return pow2(-q_prime); }
    Rational p() const { return Rational(1) - q(); }
};

/// Throws ValidationError unless t, c >= 1 and q' >= 2.
BoundParams make_bound_params(std::size_t t, std::size_t c, long q_prime);

/// a[i], b[i] hold a_{i+1}, b_{i+1}.
struct SeqTable {
    std::vector<Rational> a;
    std::vector<Rational> b;

    const Rational& a_at(std::size_t k) const { return a.at(k - 1); }
    const Rational& b_at(std::size_t k) const { return b.at(k - 1); }
};

/// a_1 = 1, b_1 = 0 and for k > 1
///   a_k = q p^(k-2) a_(k-1) + 2 q^2 p^(k-3)
///   b_k = q^2 p^(k-2) a_(k-1) + q p^(k-1) b_(k-1) + q^2 p^(k-3)
/// with p = 1 - q. At k = 2 the factor p^(k-3) is 1/p.
SeqTable ab_sequences(std::size_t t, const Rational& q);
inline SeqTable ab_sequences(const BoundParams& params) {
    return ab_sequences(params.t, params.q());
}

/// g_k(n, m, D) = a_k m D^(k-1) - b_k n D^k.
Rational g_value(const Rational& n, const Rational& m, const Rational& delta, std::size_t k,
                 const Rational& q);

/// g_k(n,m,D) - [q D g_(k-1)(n, m - q n D, p D) - q^2 p^(k-3) D^(k-1) (n D - 2m)].
/// Identically zero; k >= 2.
Rational recursion_identity_residual(const Rational& n, const Rational& m, const Rational& delta,
                                     std::size_t k, const Rational& q);

/// Lower bound on the number of nice k-walks obtained by unrolling
///   f_k(n,m,D) >= a [ f_(k-1)(n, m - a n, D - a) - (n D - 2m) a (D - a)^(k-3) ]
/// down to f_1 = m, using schedule[0] at the outermost level. Every level is
/// clamped below at 0. The schedule must have k - 1 entries, each with
/// 1 <= a <= (current D)/2, else ValidationError.
Rational lemma1_lower(std::int64_t n, std::int64_t m, std::int64_t delta,
                      const std::vector<std::int64_t>& schedule, std::size_t k);

/// No q' up to the search cap separates a_t from 4 c b_t.
///
/// With the recursions above this happens for every t >= 3: as q -> 0 the
/// ratio a_t / b_t tends to 3 (t = 3) or 2 (t >= 4) and stays below 4 on the
/// whole interval (0, 1/2), so only t <= 2 admits a separating q.
class SeparationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest q' >= 2 with a_t - 4 c b_t > 0 at q = 2^-q'. Throws
/// SeparationError past `cap` (0 selects 64 t^2).
BoundParams find_q_prime(std::size_t t, std::size_t c, long cap = 0);

/// a_t - 4 c b_t at q = 2^-q'.
Rational separation(std::size_t t, std::size_t c, long q_prime);

struct EpsilonResult {
    BoundParams params;
    Rational alpha;    ///< a_t/4 - c b_t
    Rational epsilon;  ///< min{c^(t-1) alpha, 2^(-q' t^2)}
};

EpsilonResult epsilon(std::size_t t, std::size_t c);

/// Arithmetic trace for the badness criterion on a graph with n vertices,
/// average degree dbar and maximum degree delta.
struct BadnessCertificate {
    bool applies = false;
    bool degree_condition = false;   ///< delta <= c * dbar
    bool density_condition = false;  ///< eps * dbar^t > n

    std::int64_t n = 0;
    Rational dbar;
    std::int64_t delta = 0;
    std::size_t t = 1;
    std::size_t c = 1;
    /// Absent when find_q_prime fails for (t, c); applies is then false.
    std::optional<EpsilonResult> eps;

    // Populated when eps is available and dbar > 0.
    std::optional<long> r_prime;          ///< ceil(log2 dbar)
    Rational r;                           ///< 2^r'
    Rational scaled_r_power;              ///< 2^(-q' t^2) r^t
    bool scaled_r_power_dominates = false;  ///< 2^(-q' t^2) r^t >= eps dbar^t
    bool r_exceeds_threshold = false;     ///< r > 2^(q' t)
    std::vector<Rational> integrality_values;  ///< q p^j c r, j = 0..t-2
    bool integrality_ok = false;          ///< all of the above are positive integers
    Rational g_t;                         ///< g_t(n, n r/4, c r)
    Rational g_t_closed_form;             ///< n r^t c^(t-1) alpha_t
    Rational n_squared;
    bool exceeds_n_squared = false;       ///< g_t > n^2
};

/// applies = (delta <= c dbar) and (eps(t,c) dbar^t > n). When it applies,
/// every labelling has more than n^2 nice t-walks and hence two with the same
/// ordered endpoints, so the graph is bad.
BadnessCertificate theorem1_certify(std::int64_t n, const Rational& dbar, std::int64_t delta,
                                    std::size_t t, std::size_t c);

/// Rational upper bound 10.87313 >= 4e used in the degree/girth threshold.
Rational four_e_upper_bound();

/// True when 4e k^2 (delta-1)^(k-1) < k! holds with 4e replaced by four_e_upper_bound().
bool lll_condition(std::size_t k, std::int64_t delta);

struct LllThreshold {
    std::size_t k = 2;
    std::size_t girth_threshold = 4;  ///< 2k
};

/// Smallest k >= 2 passing lll_condition; any graph with maximum degree at
/// most delta and girth at least 2k is good. delta >= 1.
LllThreshold lll_min_k(std::int64_t delta);

struct CorollaryParams {
    std::size_t girth = 3;
    bool special_case = false;  ///< g in {3, 4}: K3 or K2,3 already witnesses it
    std::optional<std::size_t> t;
    /// Absent when no q' separates a_t from 4 b_t (see SeparationError);
    /// threshold and d_min are then absent too.
    std::optional<EpsilonResult> eps;
    std::optional<Rational> threshold;   ///< 2 / eps(t, 1)
    std::optional<std::uint64_t> d_min;  ///< smallest odd prime power > threshold
    bool d_min_above_cap = false;        ///< threshold too large for the 2^64 search
    std::optional<bool> witness_inequality;  ///< 2 d^(3g/4 - 1) < eps d^t at d_min
};

CorollaryParams corollary_params(std::size_t g);

bool is_prime(std::uint64_t n);
bool is_odd_prime_power(std::uint64_t n);
/// Smallest odd prime power strictly above `bound`, or nullopt if none below 2^64.
std::optional<std::uint64_t> smallest_odd_prime_power_above(const Rational& bound);

}  // namespace goodlab
