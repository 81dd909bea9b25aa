#include <doctest.h>

#include "dfstab/ratfun.hpp"
#include "test_util.hpp"

using namespace dfstab;
using dfstab::testutil::ipoly;
using dfstab::testutil::Rng;

namespace {

RatFun rf(std::vector<long> num, std::vector<long> den) {
    return RatFun(ipoly(std::move(num)), ipoly(std::move(den)));
}

RatFun random_ratfun(Rng& rng, int max_deg = 3) {
    while (true) {
        Poly n = rng.poly(max_deg, 4);
        Poly d = rng.poly(max_deg, 4, true);
        RatFun f(n, d);
        if (!f.is_zero()) return f;
    }
}

} // namespace

TEST_CASE("ratfun normalization") {
    RatFun f = rf({0, 2}, {0, 0, 4}); // 2x / 4x^2 = 1/(2x)
    CHECK(f.num() == ipoly({1}) * Poly(rat(1, 2)));
    CHECK(f.den() == Poly::variable());
    CHECK(RatFun(Poly(), ipoly({3, 1})).is_zero());
    CHECK_THROWS_AS(RatFun(ipoly({1}), Poly()), std::invalid_argument);
}

TEST_CASE("order_at") {
    CHECK(order_at(rf({1}, {0, 1}), rat(0)) == -1);
    CHECK(order_at(rf({0, 0, 1}, {1}), rat(0)) == 2);
    CHECK(order_at(rf({1, 3}, {0, 0, 1}), rat(0)) == -2);
    CHECK_THROWS_AS(order_at(RatFun(), rat(0)), std::invalid_argument);
}

TEST_CASE("residue_at") {
    CHECK(residue_at(rf({1}, {0, 1}), rat(0)) == 1);
    CHECK(residue_at(rf({1}, {0, 0, 1}), rat(0)) == 0);
    // 2/x + 1/(x-1) at 0 -> 2 (q'/q picks up the multiplicity)
    RatFun f = rf({2}, {0, 1}) + rf({1}, {-1, 1});
    CHECK(residue_at(f, rat(0)) == 2);
    CHECK(residue_at(f, rat(1)) == 1);
    // residue of q'/q at a root of multiplicity m is m
    Poly q = ipoly({0, 0, 1}) * ipoly({-1, 1}); // x^2 (x-1)
    RatFun qq(q.derivative(), q);
    CHECK(residue_at(qq, rat(0)) == 2);
    CHECK(residue_at(qq, rat(1)) == 1);
}

TEST_CASE("order and residue at infinity") {
    CHECK(order_at_infinity(rf({0, 0, 1}, {1})) == -2);
    CHECK(order_at_infinity(rf({3}, {-2, 1})) == 1);
    CHECK(order_at_infinity(rf({1, 1}, {0, 0, 0, 1})) == 2);
    // q'/q for q = x^2(x-1): residue at infinity -deg q
    Poly q = ipoly({0, 0, 1}) * ipoly({-1, 1});
    CHECK(residue_at_infinity(RatFun(q.derivative(), q)) == -3);
    // -h'/h for h = x^2 -> deg h
    Poly h = ipoly({0, 0, 1});
    CHECK(residue_at_infinity(RatFun(-h.derivative(), h)) == 2);
    CHECK(residue_at_infinity(rf({1}, {0, 0, 1})) == 0);
}

TEST_CASE("order_at_infinity equals series expansion on random instances") {
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        RatFun f = random_ratfun(rng);
        int t = order_at_infinity(f);
        CHECK(t == f.den().degree() - f.num().degree());
        // cross-check: x^t * f tends to a nonzero constant at infinity, i.e.
        // num and den of x^t f have equal degree
        RatFun scaled = t >= 0 ? f * RatFun(Poly::monomial(rat(1), t))
                               : f / RatFun(Poly::monomial(rat(1), -t));
        CHECK(scaled.num().degree() == scaled.den().degree());
    }
}

TEST_CASE("pole_profile") {
    // f = -2/x + 1/(x-1): S-factor (x, -2), delta = x^2
    RatFun f = rf({-2}, {0, 1}) + rf({1}, {-1, 1});
    PoleProfile p = pole_profile(f, 6);
    REQUIRE(p.simple_neg_int_poles.size() == 1);
    CHECK(p.simple_neg_int_poles[0].factor == Poly::variable());
    CHECK(p.simple_neg_int_poles[0].residue == -2);
    CHECK(p.delta == ipoly({0, 0, 1}));
    CHECK(p.s_count == 1);
    CHECK(p.warnings.empty());

    // pole not simple
    PoleProfile p2 = pole_profile(rf({1}, {0, 0, 1}), 6);
    CHECK(p2.simple_neg_int_poles.empty());
    CHECK(p2.delta.is_one());

    // q'/q has only positive residues
    Poly q = ipoly({0, 0, 1}) * ipoly({-1, 1}) * ipoly({2, 1});
    PoleProfile p3 = pole_profile(RatFun(q.derivative(), q), 6);
    CHECK(p3.simple_neg_int_poles.empty());
    CHECK(p3.delta.is_one());

    // zero input: empty profile with delta = 1
    PoleProfile p0 = pole_profile(RatFun(), 6);
    CHECK(p0.delta.is_one());
    CHECK(p0.s_count == 0);
}

TEST_CASE("pole_profile over an irreducible quadratic block") {
    // f = -h'/h for h = x^2 + 1: residue -1 at both conjugate poles
    Poly h = ipoly({1, 0, 1});
    RatFun f(-h.derivative(), h);
    PoleProfile p = pole_profile(f, 6);
    REQUIRE(p.simple_neg_int_poles.size() == 1);
    CHECK(p.simple_neg_int_poles[0].factor == h);
    CHECK(p.simple_neg_int_poles[0].residue == -1);
    CHECK(p.delta == h);
    CHECK(p.s_count == 2);
    CHECK(p.warnings.empty());
}

TEST_CASE("pole_profile agrees with per-root residues for linear denominators") {
    Rng rng(22);
    std::vector<Rat> roots = {rat(0), rat(1), rat(-1), rat(2)};
    for (int it = 0; it < 40; ++it) {
        // f = sum c_i/(x - r_i) with small integer or fractional residues
        RatFun f;
        std::vector<std::pair<Rat, Rat>> data;
        for (const auto& r : roots) {
            Rat c = rng.rational(3, 2);
            if (c == 0) continue;
            data.emplace_back(r, c);
            f = f + RatFun(Poly(c), Poly::linear_root(r));
        }
        if (f.is_zero()) continue;
        PoleProfile p = pole_profile(f, 6);
        Poly expected_delta(rat(1));
        long expected_count = 0;
        for (const auto& [r, c] : data) {
            CHECK(residue_at(f, r) == c);
            if (is_integer(c) && c < 0) {
                expected_delta = expected_delta *
                                 Poly::linear_root(r).pow(static_cast<unsigned>(to_long(-c)));
                expected_count += 1;
            }
        }
        CHECK(p.delta == expected_delta);
        CHECK(p.s_count == expected_count);
    }
}

TEST_CASE("sum of residues vanishes for doubly-proper f with linear poles") {
    Rng rng(33);
    for (int it = 0; it < 40; ++it) {
        // build den with distinct linear roots, num with deg <= deg den - 2
        Poly den(rat(1));
        std::vector<Rat> roots;
        for (long r = -2; r <= 2; ++r)
            if (rng.integer(0, 1)) {
                den = den * Poly::linear_root(rat(r));
                roots.push_back(rat(r));
            }
        if (den.degree() < 2) continue;
        Poly num = rng.poly(den.degree() - 2, 5, true);
        RatFun f(num, den);
        Rat sum(0);
        for (const auto& r : roots) sum += residue_at(f, r);
        CHECK(sum == 0);
    }
}

TEST_CASE("hermite_reduce") {
    // 1/x^2 -> (-1/x, 0)
    auto [g1, h1] = hermite_reduce(rf({1}, {0, 0, 1}));
    CHECK(g1 == rf({-1}, {0, 1}));
    CHECK(h1.is_zero());
    // 1/x -> (0, 1/x)
    auto [g2, h2] = hermite_reduce(rf({1}, {0, 1}));
    CHECK(g2.is_zero());
    CHECK(h2 == rf({1}, {0, 1}));
    // (3x+1)/x^2 -> (-1/x, 3/x)
    auto [g3, h3] = hermite_reduce(rf({1, 3}, {0, 0, 1}));
    CHECK(g3 == rf({-1}, {0, 1}));
    CHECK(h3 == rf({3}, {0, 1}));
}

TEST_CASE("hermite_reduce reconstructs f and leaves square-free denominator") {
    Rng rng(44);
    for (int it = 0; it < 80; ++it) {
        Poly den(rat(1));
        for (int k = 0; k < 2; ++k) {
            Poly f = rng.poly(2, 3, true);
            if (f.degree() < 1) continue;
            den = den * f.pow(static_cast<unsigned>(rng.integer(1, 3)));
        }
        Poly num = rng.poly(4, 5, true);
        if (den.degree() < 1) continue;
        RatFun f(num, den);
        if (f.is_zero()) continue;
        auto [g, h] = hermite_reduce(f);
        CHECK(g.derivative() + h == f);
        if (!h.is_zero()) {
            CHECK(poly_gcd(h.den(), h.den().derivative()).degree() == 0);
            CHECK(h.num().degree() < h.den().degree());
        }
    }
}

TEST_CASE("is_rationally_integrable") {
    CHECK(is_rationally_integrable(rf({1}, {0, 0, 1})));
    CHECK_FALSE(is_rationally_integrable(rf({1}, {0, 1})));
    // p/q with deg p = deg q - 1 is never integrable (nonzero residue at infinity)
    Poly q = ipoly({0, 0, 1}) * ipoly({-1, 1}) * ipoly({-1, 1});
    Poly p = ipoly({1, 2, 0, 5});
    CHECK(q.degree() == 4);
    CHECK(p.degree() == q.degree() - 1);
    CHECK_FALSE(is_rationally_integrable(RatFun(p, q)));
}

TEST_CASE("derivatives are rationally integrable, simple poles are not") {
    Rng rng(55);
    for (int it = 0; it < 60; ++it) {
        RatFun f = random_ratfun(rng);
        CHECK(is_rationally_integrable(f.derivative()));
    }
    for (long a = -2; a <= 2; ++a)
        for (long c = 1; c <= 3; ++c)
            CHECK_FALSE(is_rationally_integrable(RatFun(Poly(rat(c)), Poly::linear_root(rat(a)))));
}
