#include "doctest.h"

#include <cmath>

#include "goodlab/bounds.hpp"
#include "goodlab/errors.hpp"
#include "goodlab/generators.hpp"
#include "oracles.hpp"

using namespace goodlab;

namespace {

oracle::Q to_q(const Rational& r) {
    return oracle::Q(boost::multiprecision::cpp_int(boost::multiprecision::numerator(r).str()),
                     boost::multiprecision::cpp_int(boost::multiprecision::denominator(r).str()));
}

Rational random_rational(Rng& rng, std::uint64_t span, bool positive = false) {
    auto num = static_cast<long long>(uniform_below(rng, 2 * span + 1)) - static_cast<long long>(span);
    if (positive) num = 1 + static_cast<long long>(uniform_below(rng, span));
    auto den = 1 + static_cast<long long>(uniform_below(rng, 50));
    return Rational(num, den);
}

}  // namespace

TEST_CASE("ab_sequences base case and k = 2 values") {
    for (long qp : {2L, 3L, 7L}) {
        auto s = ab_sequences(1, pow2(-qp));
        CHECK(s.a_at(1) == 1);
        CHECK(s.b_at(1) == 0);
    }
    auto quarter = ab_sequences(2, Rational(1, 4));
    CHECK(quarter.a_at(2) == Rational(5, 12));
    CHECK(quarter.b_at(2) == Rational(7, 48));
    auto eighth = ab_sequences(2, Rational(1, 8));
    CHECK(eighth.a_at(2) == Rational(9, 56));
    CHECK(eighth.b_at(2) == Rational(15, 448));
    CHECK_THROWS_AS(ab_sequences(0, Rational(1, 4)), ValidationError);
    CHECK_THROWS_AS(ab_sequences(3, Rational(1)), ValidationError);
    CHECK_THROWS_AS(make_bound_params(2, 1, 1), ValidationError);
}

TEST_CASE("ab_sequences matches the independent recurrence oracle") {
    for (const Rational& q : {Rational(1, 4), Rational(1, 8), Rational(3, 7), Rational(1, 1024)}) {
        auto table = ab_sequences(10, q);
        auto ref = oracle::ab(10, to_q(q));
        for (std::size_t k = 1; k <= 10; ++k) {
            CHECK(to_string(table.a_at(k)) == oracle::str(ref.a[k - 1]));
            CHECK(to_string(table.b_at(k)) == oracle::str(ref.b[k - 1]));
        }
    }
}

TEST_CASE("g_value") {
    CHECK(g_value(10, 15, 4, 1, Rational(1, 4)) == 15);
    CHECK(g_value(30, 240, 16, 2, Rational(1, 4)) == 480);
    CHECK(g_value(30, 240, 16, 3, Rational(1, 4)) == -120);
    CHECK(to_string(g_value(30, 240, 16, 3, Rational(1, 4))) ==
          oracle::str(oracle::g(30, 240, 16, 3, oracle::Q(1, 4))));
    for (std::size_t k = 2; k <= 6; ++k) {
        auto table = ab_sequences(k, Rational(1, 8));
        Rational value = g_value(9, 0, 5, k, Rational(1, 8));
        CHECK(value == -table.b_at(k) * 9 * pow(Rational(5), static_cast<long>(k)));
        CHECK(value <= 0);
    }
}

TEST_CASE("recursion identity holds exactly") {
    CHECK(recursion_identity_residual(30, 240, 16, 2, Rational(1, 4)) == 0);
    CHECK(recursion_identity_residual(7, 13, 9, 3, Rational(1, 8)) == 0);
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        Rational n = random_rational(rng, 500);
        Rational m = random_rational(rng, 500);
        Rational d = random_rational(rng, 60);
        Rational q = Rational(1 + static_cast<long long>(uniform_below(rng, 49)), 100);
        std::size_t k = 2 + uniform_below(rng, 9);
        REQUIRE(recursion_identity_residual(n, m, d, k, q) == 0);
    }
    CHECK_THROWS_AS(recursion_identity_residual(1, 1, 1, 1, Rational(1, 4)), ValidationError);
}

TEST_CASE("lemma1_lower") {
    CHECK(lemma1_lower(10, 15, 4, {}, 1) == 15);
    CHECK(lemma1_lower(100, 200, 4, {1}, 2) == 100);
    CHECK(lemma1_lower(4, 4, 2, {1}, 2) == 0);
    // Level 3, a=2: 2 * [L2(10, 20, 6) - 0]; level 2, a=1: 1 * [L1(10, 10, 5) - 20 * 1 * 5^-1] = 6.
    CHECK(lemma1_lower(10, 40, 8, {2, 1}, 3) == 12);
    // Clamping: a sparse graph gives a negative unclamped value.
    CHECK(lemma1_lower(10, 5, 8, {4}, 2) == 0);

    CHECK_THROWS_AS(lemma1_lower(10, 40, 8, {5}, 2), ValidationError);     // a > D/2
    CHECK_THROWS_AS(lemma1_lower(10, 40, 8, {2, 4}, 3), ValidationError);  // 4 > (8-2)/2
    CHECK_THROWS_AS(lemma1_lower(10, 40, 8, {2}, 3), ValidationError);     // wrong length
    CHECK_THROWS_AS(lemma1_lower(10, 40, 8, {0}, 2), ValidationError);
}

TEST_CASE("find_q_prime") {
    CHECK(find_q_prime(1, 1).q_prime == 2);
    CHECK(find_q_prime(1, 50).q_prime == 2);

    auto p21 = find_q_prime(2, 1);
    CHECK(p21.q_prime == 3);
    CHECK(separation(2, 1, 2) == Rational(-1, 6));
    CHECK(separation(2, 1, 3) == Rational(3, 112));

    CHECK(find_q_prime(2, 2).q_prime == 4);

    for (std::size_t c = 1; c <= 20; ++c) {
        long qp = find_q_prime(2, c).q_prime;
        CHECK(separation(2, c, qp) > 0);
        if (qp > 2) CHECK(separation(2, c, qp - 1) <= 0);
    }
}

TEST_CASE("no q' separates a_t from 4 c b_t once t >= 3") {
    CHECK_THROWS_AS(find_q_prime(3, 1), SeparationError);
    CHECK_THROWS_AS(find_q_prime(4, 1, 200), SeparationError);
    // The ratio a_t / b_t approaches 3 (t = 3) and 2 (t = 4) from below.
    for (long qp : {2L, 5L, 20L, 80L}) {
        auto t3 = ab_sequences(3, pow2(-qp));
        CHECK(t3.a_at(3) < 3 * t3.b_at(3));
        auto t4 = ab_sequences(4, pow2(-qp));
        CHECK(t4.a_at(4) < 4 * t4.b_at(4));
    }
    CHECK_THROWS_AS(epsilon(3, 1), SeparationError);
}

TEST_CASE("epsilon") {
    auto e11 = epsilon(1, 1);
    CHECK(e11.params.q_prime == 2);
    CHECK(e11.alpha == Rational(1, 4));
    CHECK(e11.epsilon == Rational(1, 4));

    auto e21 = epsilon(2, 1);
    CHECK(e21.params.q_prime == 3);
    CHECK(e21.alpha == Rational(3, 448));
    CHECK(e21.epsilon == Rational(1, 4096));

    auto e22 = epsilon(2, 2);
    CHECK(e22.params.q_prime == 4);
    CHECK(e22.alpha == Rational(1, 640));
    CHECK(e22.epsilon == Rational(1, 65536));

    for (std::size_t c = 1; c <= 8; ++c) {
        for (std::size_t t = 1; t <= 2; ++t) {
            auto e = epsilon(t, c);
            const auto tl = static_cast<long>(t);
            CHECK(e.alpha > 0);
            CHECK(e.epsilon > 0);
            CHECK(e.epsilon <= pow2(-e.params.q_prime * tl * tl));
        }
    }
}

TEST_CASE("theorem1_certify on a dense complete graph") {
    auto cert = theorem1_certify(4100, 4099, 4099, 2, 1);
    CHECK(cert.applies);
    CHECK(cert.degree_condition);
    CHECK(cert.density_condition);
    REQUIRE(cert.eps);
    CHECK(cert.eps->epsilon == Rational(1, 4096));
    CHECK(Rational(4099) * 4099 / 4096 == Rational(16801801, 4096));
    REQUIRE(cert.r_prime);
    CHECK(*cert.r_prime == 13);
    CHECK(cert.r == 8192);
    CHECK(cert.r_exceeds_threshold);
    CHECK(cert.scaled_r_power_dominates);
    CHECK(cert.integrality_ok);
    CHECK(cert.integrality_values == std::vector<Rational>{Rational(1024)});
    CHECK(cert.g_t == cert.g_t_closed_form);
    CHECK(cert.exceeds_n_squared);
    CHECK(cert.n_squared == Rational(4100) * 4100);
}

TEST_CASE("K4100 is independently bad") {
    CHECK(forbidden_screen(make_complete(4100)).contains_k3);
}

TEST_CASE("theorem1_certify rejects sparse or irregular graphs") {
    auto petersen = theorem1_certify(10, 3, 3, 2, 1);
    CHECK_FALSE(petersen.applies);
    CHECK(petersen.degree_condition);
    CHECK_FALSE(petersen.density_condition);

    // Max degree above c * dbar: fails regardless of density.
    CHECK_FALSE(theorem1_certify(5, 1000, 1001, 2, 1).applies);
    CHECK_FALSE(theorem1_certify(1, 5000, 20000, 1, 3).applies);
    CHECK(theorem1_certify(1, 5000, 15000, 1, 3).applies);

    // t >= 3 has no epsilon: never applies, no trace.
    auto t3 = theorem1_certify(10, 1000, 1000, 3, 1);
    CHECK_FALSE(t3.applies);
    CHECK_FALSE(t3.eps);
    CHECK_FALSE(t3.r_prime);
}

TEST_CASE("theorem1_certify is monotone in n and its trace holds whenever it applies") {
    Rng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t t = 1 + uniform_below(rng, 2);
        const std::size_t c = 1 + uniform_below(rng, 3);
        Rational dbar(static_cast<long long>(1 + uniform_below(rng, 20000)),
                      static_cast<long long>(1 + uniform_below(rng, 3)));
        auto delta = static_cast<std::int64_t>(uniform_below(rng, 3 * 20000));
        std::int64_t n = 1 + static_cast<std::int64_t>(uniform_below(rng, 100000));
        auto cert = theorem1_certify(n, dbar, delta, t, c);
        if (!cert.applies) continue;
        CHECK(cert.r_exceeds_threshold);
        CHECK(cert.scaled_r_power_dominates);
        CHECK(cert.integrality_ok);
        CHECK(cert.exceeds_n_squared);
        CHECK(cert.g_t == cert.g_t_closed_form);
        for (std::int64_t smaller : {n - 1, n / 2, std::int64_t{1}}) {
            if (smaller >= 1) CHECK(theorem1_certify(smaller, dbar, delta, t, c).applies);
        }
    }
}

TEST_CASE("lll_min_k") {
    CHECK(lll_min_k(1).k == 2);
    CHECK(lll_min_k(2).k == 6);
    CHECK(lll_min_k(3).k == 9);
    CHECK(lll_min_k(4).k == 12);
    CHECK(lll_min_k(2).girth_threshold == 12);
    CHECK_FALSE(lll_condition(5, 2));
    CHECK(lll_condition(6, 2));
    CHECK_FALSE(lll_condition(8, 3));
    CHECK(lll_condition(9, 3));
    CHECK_THROWS_AS(lll_min_k(0), ValidationError);

    CHECK(four_e_upper_bound() >= Rational(4) * Rational(BigInt("271828182845904523536"), BigInt("100000000000000000000")));
    // Anything accepted also satisfies the inequality with the true constant.
    for (std::int64_t delta = 1; delta <= 12; ++delta) {
        auto k = lll_min_k(delta).k;
        long double lhs = 4.0L * std::exp(1.0L) * k * k * std::pow(static_cast<long double>(delta - 1), k - 1);
        CHECK(lhs < std::tgamma(static_cast<long double>(k) + 1));
    }
}

TEST_CASE("corollary_params") {
    CHECK(corollary_params(3).special_case);
    CHECK(corollary_params(4).special_case);
    CHECK_FALSE(corollary_params(3).t);

    auto g5 = corollary_params(5);
    CHECK_FALSE(g5.special_case);
    REQUIRE(g5.t);
    CHECK(*g5.t == 4);
    // eps(4, 1) does not exist: no q' separates a_4 from 4 b_4.
    CHECK_FALSE(g5.eps);
    CHECK_FALSE(g5.threshold);
    CHECK_FALSE(g5.d_min);

    CHECK(*corollary_params(8).t == 7);
    CHECK_THROWS_AS(corollary_params(2), ValidationError);
}

TEST_CASE("odd prime powers") {
    CHECK(is_odd_prime_power(3));
    CHECK(is_odd_prime_power(9));
    CHECK(is_odd_prime_power(27));
    CHECK(is_odd_prime_power(3486784401ULL));  // 3^20
    CHECK_FALSE(is_odd_prime_power(15));
    CHECK_FALSE(is_odd_prime_power(16));
    CHECK_FALSE(is_odd_prime_power(1));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7

    CHECK(*smallest_odd_prime_power_above(Rational(8)) == 9);
    CHECK(*smallest_odd_prime_power_above(Rational(9)) == 11);
    CHECK(*smallest_odd_prime_power_above(Rational(49, 2)) == 25);
    CHECK(*smallest_odd_prime_power_above(Rational(25)) == 27);
    CHECK(*smallest_odd_prime_power_above(Rational(1000000)) == 1000003);
    CHECK(*smallest_odd_prime_power_above(Rational(1, 3)) == 3);
    CHECK_FALSE(smallest_odd_prime_power_above(pow2(64)));
}
