#include "goodlab/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "goodlab/errors.hpp"

namespace goodlab {

BoundParams make_bound_params(std::size_t t, std::size_t c, long q_prime) {
    if (t < 1 || c < 1) throw ValidationError("t and c must be positive");
    if (q_prime < 2) throw ValidationError("q' must be at least 2 so that q < 1/2");
    return BoundParams{t, c, q_prime};
}

SeqTable ab_sequences(std::size_t t, const Rational& q) {
    if (t < 1) throw ValidationError("sequence length must be positive");
    if (q <= 0 || q >= 1) throw ValidationError("q must lie in (0, 1)");
    const Rational p = Rational(1) - q;
    const Rational q2 = q * q;
    SeqTable table;
    table.a.reserve(t);
    table.b.reserve(t);
    table.a.emplace_back(1);
    table.b.emplace_back(0);
    // p_pow = p^(k-3), advanced once per k.
    Rational p_pow = Rational(1) / p;
    for (std::size_t k = 2; k <= t; ++k) {
        const Rational& a_prev = table.a.back();
        const Rational& b_prev = table.b.back();
        const Rational p_k2 = p_pow * p;   // p^(k-2)
        const Rational p_k1 = p_k2 * p;    // p^(k-1)
        Rational a = q * p_k2 * a_prev + 2 * q2 * p_pow;
        Rational b = q2 * p_k2 * a_prev + q * p_k1 * b_prev + q2 * p_pow;
        table.a.push_back(std::move(a));
        table.b.push_back(std::move(b));
        p_pow = p_k2;
    }
    return table;
}

namespace {

Rational g_from_table(const SeqTable& table, const Rational& n, const Rational& m,
                      const Rational& delta, std::size_t k) {
    const auto e = static_cast<long>(k);
    return table.a_at(k) * m * pow(delta, e - 1) - table.b_at(k) * n * pow(delta, e);
}

}  // namespace

Rational g_value(const Rational& n, const Rational& m, const Rational& delta, std::size_t k,
                 const Rational& q) {
    if (k < 1) throw ValidationError("k must be positive");
    return g_from_table(ab_sequences(k, q), n, m, delta, k);
}

Rational recursion_identity_residual(const Rational& n, const Rational& m, const Rational& delta,
                                     std::size_t k, const Rational& q) {
    if (k < 2) throw ValidationError("the g_k recursion needs k >= 2");
    const SeqTable table = ab_sequences(k, q);
    const Rational p = Rational(1) - q;
    const auto e = static_cast<long>(k);
    Rational lhs = g_from_table(table, n, m, delta, k);
    Rational rhs = q * delta * g_from_table(table, n, m - q * n * delta, p * delta, k - 1) -
                   q * q * pow(p, e - 3) * pow(delta, e - 1) * (n * delta - 2 * m);
    return lhs - rhs;
}

namespace {

Rational lemma1_level(std::int64_t n, const Rational& m, std::int64_t delta,
                      const std::vector<std::int64_t>& schedule, std::size_t index,
                      std::size_t k) {
    if (k == 1) return std::max(m, Rational(0));
    const std::int64_t a = schedule[index];
    if (a < 1 || 2 * a > delta) {
        throw ValidationError("schedule entry " + std::to_string(a) + " violates 1 <= a <= " +
                              std::to_string(delta) + "/2");
    }
    const Rational inner =
        lemma1_level(n, m - Rational(a * n), delta - a, schedule, index + 1, k - 1);
    const Rational deficit = (Rational(n * delta) - 2 * m) * a *
                             pow(Rational(delta - a), static_cast<long>(k) - 3);
    return std::max(Rational(a) * (inner - deficit), Rational(0));
}

}  // namespace

Rational lemma1_lower(std::int64_t n, std::int64_t m, std::int64_t delta,
                      const std::vector<std::int64_t>& schedule, std::size_t k) {
    if (k < 1) throw ValidationError("k must be positive");
    if (n < 1 || m < 1 || delta < 1) throw ValidationError("n, m and delta must be positive");
    if (schedule.size() != k - 1) {
        throw ValidationError("schedule must have k - 1 = " + std::to_string(k - 1) + " entries");
    }
    return lemma1_level(n, Rational(m), delta, schedule, 0, k);
}

Rational separation(std::size_t t, std::size_t c, long q_prime) {
    SeqTable table = ab_sequences(t, pow2(-q_prime));
    return table.a_at(t) - 4 * Rational(static_cast<std::int64_t>(c)) * table.b_at(t);
}

BoundParams find_q_prime(std::size_t t, std::size_t c, long cap) {
    if (t < 1 || c < 1) throw ValidationError("t and c must be positive");
    if (cap == 0) cap = 64 * static_cast<long>(t * t);
    for (long q_prime = 2; q_prime <= std::max(cap, 2L); ++q_prime) {
        if (separation(t, c, q_prime) > 0) return BoundParams{t, c, q_prime};
    }
    throw SeparationError("no q' <= " + std::to_string(cap) + " gives a_t - 4 c b_t > 0 for t = " +
                          std::to_string(t) + ", c = " + std::to_string(c));
}

EpsilonResult epsilon(std::size_t t, std::size_t c) {
    EpsilonResult result;
    result.params = find_q_prime(t, c);
    const SeqTable table = ab_sequences(result.params);
    const Rational c_r(static_cast<std::int64_t>(c));
    result.alpha = table.a_at(t) / 4 - c_r * table.b_at(t);
    const auto t_l = static_cast<long>(t);
    const Rational scaled = pow(c_r, t_l - 1) * result.alpha;
    const Rational floor_term = pow2(-result.params.q_prime * t_l * t_l);
    result.epsilon = std::min(scaled, floor_term);
    return result;
}

BadnessCertificate theorem1_certify(std::int64_t n, const Rational& dbar, std::int64_t delta,
                                    std::size_t t, std::size_t c) {
    BadnessCertificate cert;
    cert.n = n;
    cert.dbar = dbar;
    cert.delta = delta;
    cert.t = t;
    cert.c = c;

    const auto t_l = static_cast<long>(t);
    const Rational c_r(static_cast<std::int64_t>(c));
    const Rational n_r(n);
    cert.degree_condition = Rational(delta) <= c_r * dbar;
    cert.n_squared = n_r * n_r;
    try {
        cert.eps = epsilon(t, c);
    } catch (const SeparationError&) {
        return cert;
    }
    const EpsilonResult& eps = *cert.eps;
    cert.density_condition = eps.epsilon * pow(dbar, t_l) > n_r;
    cert.applies = cert.degree_condition && cert.density_condition;

    if (dbar <= 0) return cert;

    const long q_prime = eps.params.q_prime;
    const Rational q = eps.params.q();
    const Rational p = eps.params.p();
    cert.r_prime = ceil_log2(dbar);
    cert.r = pow2(*cert.r_prime);
    cert.scaled_r_power = pow2(-q_prime * t_l * t_l) * pow(cert.r, t_l);
    cert.scaled_r_power_dominates = cert.scaled_r_power >= eps.epsilon * pow(dbar, t_l);
    cert.r_exceeds_threshold = cert.r > pow2(q_prime * t_l);

    cert.integrality_ok = true;
    Rational value = q * c_r * cert.r;
    for (std::size_t j = 0; j + 2 <= t; ++j) {
        cert.integrality_ok = cert.integrality_ok && is_integer(value) && value > 0;
        cert.integrality_values.push_back(value);
        value *= p;
    }

    const Rational m = n_r * cert.r / 4;
    const Rational max_deg = c_r * cert.r;
    cert.g_t = g_value(n_r, m, max_deg, t, q);
    cert.g_t_closed_form = n_r * pow(cert.r, t_l) * pow(c_r, t_l - 1) * eps.alpha;
    cert.exceeds_n_squared = cert.g_t > cert.n_squared;
    return cert;
}

Rational four_e_upper_bound() { return Rational(BigInt(1087313), BigInt(100000)); }

bool lll_condition(std::size_t k, std::int64_t delta) {
    BigInt factorial = 1;
    for (std::size_t i = 2; i <= k; ++i) factorial *= i;
    const Rational lhs = four_e_upper_bound() * Rational(static_cast<std::int64_t>(k * k)) *
                         pow(Rational(delta - 1), static_cast<long>(k) - 1);
    return lhs < Rational(factorial);
}

LllThreshold lll_min_k(std::int64_t delta) {
    if (delta < 1) throw ValidationError("maximum degree must be at least 1");
    std::size_t k = 2;
    while (!lll_condition(k, delta)) ++k;
    return LllThreshold{k, 2 * k};
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// floor(n^(1/e)) for e >= 2.
std::uint64_t integer_root(std::uint64_t n, unsigned e) {
    auto pow_capped = [](std::uint64_t x, unsigned e, std::uint64_t limit) {
        u128 acc = 1;
        for (unsigned i = 0; i < e; ++i) {
            acc *= x;
            if (acc > limit) return limit + static_cast<u128>(1);
        }
        return acc;
    };
    std::uint64_t lo = 1;
    std::uint64_t hi = std::uint64_t{1} << (64 / e + 1);
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (pow_capped(mid, e, n) <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                                31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These bases are deterministic for all 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_odd_prime_power(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    if (is_prime(n)) return true;
    for (unsigned e = 2; e < 64; ++e) {
        std::uint64_t root = integer_root(n, e);
        if (root < 3) break;
        u128 power = 1;
        for (unsigned i = 0; i < e; ++i) power *= root;
        if (power == n && is_prime(root)) return true;
    }
    return false;
}

std::optional<std::uint64_t> smallest_odd_prime_power_above(const Rational& bound) {
    const BigInt cap = BigInt(1) << 64;
    BigInt start = floor(bound) + 1;
    if (start < 3) start = 3;
    if (start >= cap) return std::nullopt;
    auto d = start.convert_to<std::uint64_t>();
    if (d % 2 == 0) ++d;
    for (; d >= 3; d += 2) {  // stops on wrap-around past 2^64
        if (is_odd_prime_power(d)) return d;
        if (d > UINT64_MAX - 2) break;
    }
    return std::nullopt;
}

CorollaryParams corollary_params(std::size_t g) {
    if (g < 3) throw ValidationError("girth must be at least 3");
    CorollaryParams out;
    out.girth = g;
    if (g <= 4) {
        out.special_case = true;
        return out;
    }
    const std::size_t t = 3 * g / 4 + 1;
    out.t = t;
    try {
        out.eps = epsilon(t, 1);
    } catch (const SeparationError&) {
        return out;
    }
    out.threshold = Rational(2) / out.eps->epsilon;
    out.d_min = smallest_odd_prime_power_above(*out.threshold);
    out.d_min_above_cap = !out.d_min.has_value();
    if (out.d_min) {
        // 2 d^(3g/4 - 1) < eps d^t, raised to the 4th power to stay integral:
        // 16 d^(3g - 4) < eps^4 d^(4t).
        const Rational d(BigInt(*out.d_min));
        const auto g_l = static_cast<long>(g);
        const auto t_l = static_cast<long>(t);
        out.witness_inequality =
            Rational(16) * pow(d, 3 * g_l - 4) < pow(out.eps->epsilon, 4) * pow(d, 4 * t_l);
    }
    return out;
}

}  // namespace goodlab
