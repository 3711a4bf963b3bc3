#include <doctest.h>

#include <random>

#include "prism/m4_structure.hpp"
#include "prism/prism_seq.hpp"

using namespace prism;

namespace {

GroupRingElement random_gr(std::mt19937& rng, int p, CoefficientRing ring) {
    std::uniform_int_distribution<int64_t> d(ring.modulus ? 0 : -5, ring.modulus ? ring.modulus - 1 : 5);
    GroupRingElement x(p, ring);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) x.set_coeff(i, j, d(rng));
    return x;
}

}  // namespace

TEST_CASE("map formula spot values (p=3)") {
    PrismContext ctx(3);
    const auto& se = ctx.special({0});
    GroupRingElement z(3, CoefficientRing{0});
    GroupRingElement one = GroupRingElement::one(3, {0});

    // d1(T_G) = (T_G, -p T_G)
    CHECK(ctx.apply_d(1, ctx.m1(1)) == ctx.m2(se.TG, -3));
    // d2(1, 0) = (-t1, -t2, T3, T4)
    CHECK(ctx.apply_d(2, ctx.m2(one, 0)) == ctx.m3(-se.t_(1), -se.t_(2), se.T_(3), se.T_(4)));
    // h1(1, 0) = T_G
    CHECK(ctx.apply_h(1, ctx.m2(one, 0)) == ctx.m1(1));
    // h2(d2(1,0)) = (p - T_G, p T_G)
    CHECK(ctx.apply_h(2, ctx.apply_d(2, ctx.m2(one, 0))) == ctx.m2(one * 3 - se.TG, 3));
    // h1 d1 (T_G) = p T_G
    CHECK(ctx.apply_h(1, ctx.apply_d(1, ctx.m1(1))) == ctx.m1(3));
    // the h3 precursor vanishes on im d2: p Delta - d2 h2 (Delta) = 0
    PrismElement delta = ctx.apply_d(2, ctx.m2(one, 0));
    PrismElement lhs = delta;
    for (auto& v : lhs.vec) v *= 3;
    CHECK(ctx.apply_d(2, ctx.apply_h(2, delta)) == lhs);
    PrismElement deltag = ctx.apply_d(2, ctx.m2(z, 1));
    PrismElement lhs2 = deltag;
    for (auto& v : lhs2.vec) v *= 3;
    CHECK(ctx.apply_d(2, ctx.apply_h(2, deltag)) == lhs2);
}

TEST_CASE("d3 d2 == 0 and canonical M4 forms") {
    PrismContext ctx(3);
    std::mt19937 rng(2024);
    for (int it = 0; it < 20; ++it) {
        auto eta = random_gr(rng, 3, {0});
        PrismElement x = ctx.apply_d(2, ctx.m2(eta, int64_t(rng() % 7) - 3));
        CHECK(ctx.apply_d(3, x).is_zero());
    }
    // reduce(x + d2 y) == reduce(x)
    for (int it = 0; it < 100; ++it) {
        PrismElement x = ctx.zero(3, {0});
        for (auto& v : x.vec) v = int64_t(rng() % 9) - 4;
        PrismElement y = ctx.apply_d(2, ctx.m2(random_gr(rng, 3, {0}), int64_t(rng() % 7) - 3));
        PrismElement sum = x;
        for (size_t i = 0; i < sum.vec.size(); ++i) sum.vec[i] += y.vec[i];
        CHECK(ctx.m4_class(sum) == ctx.m4_class(x));
    }
}

TEST_CASE("kappa solver") {
    // the fixed p=3 pair is the explicit one and validates
    KappaPair k3 = solve_kappa(3);
    auto se = SpecialElements::make(3, {0});
    CHECK(k3.k1 == -(se.tau_(1) + se.tau_(1).pow(2) * 2));
    CHECK(k3.k2 == -(se.tau_(2) + se.tau_(2).pow(2) * 2));
    CHECK(validate_kappa(3, k3));
    CHECK(validate_kappa(3, solve_kappa_generic(3)));
    for (int p : {5, 7}) {
        KappaPair k = solve_kappa(p);
        CHECK(validate_kappa(p, k));
        // direct substitution: t1 k1 + t2 k2 + (p-1)/2 (T3 + T(p+1)) == T_G - p
        auto s = SpecialElements::make(p, {0});
        auto lhs = s.t_(1) * k.k1 + s.t_(2) * k.k2 + (s.T_(3) + s.T_(p + 1)) * int64_t((p - 1) / 2);
        CHECK(lhs == s.TG - GroupRingElement::one(p, {0}) * p);
    }
}

TEST_CASE("kappa consequence identities") {
    for (int p : {3, 5, 7}) {
        PrismContext ctx(p);
        auto rep = ctx.verify_kappa();
        CHECK(rep.ok());
    }
}

TEST_CASE("exactness over Z and the finite rings (p=3)") {
    PrismContext ctx(3);
    for (int64_t m : {int64_t(0), int64_t(3), int64_t(9)}) {
        auto rep = ctx.verify_exactness(m);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("exactness p=5") {
    PrismContext ctx(5);
    for (int64_t m : {int64_t(0), int64_t(5), int64_t(25)}) {
        auto rep = ctx.verify_exactness(m);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("homotopy prism identities (p=3, all moduli)") {
    PrismContext ctx(3);
    for (int64_t m : {int64_t(0), int64_t(3), int64_t(9)}) {
        auto rep = ctx.verify_homotopy_prism(m);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("h2 congruences mod p M2") {
    for (int p : {3, 5}) {
        PrismContext ctx(p);
        auto rep = ctx.verify_h2_congruences();
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("reduction from Z commutes with d and h") {
    PrismContext ctx(3);
    std::mt19937 rng(77);
    auto reduce_vec = [&](const PrismElement& x, int64_t m) {
        PrismElement out = x;
        out.ring = {m};
        for (auto& v : out.vec) v = ((v % m) + m) % m;
        return out;
    };
    for (int64_t m : {int64_t(3), int64_t(9)}) {
        for (int it = 0; it < 25; ++it) {
            PrismElement x2 = ctx.m2(random_gr(rng, 3, {0}), int64_t(rng() % 11) - 5);
            CHECK(reduce_vec(ctx.apply_d(2, x2), m) == ctx.apply_d(2, reduce_vec(x2, m)));
            CHECK(reduce_vec(ctx.apply_h(1, x2), m) == ctx.apply_h(1, reduce_vec(x2, m)));
            PrismElement x3 = ctx.zero(3, {0});
            for (auto& v : x3.vec) v = int64_t(rng() % 9) - 4;
            CHECK(reduce_vec(ctx.apply_d(3, x3), m) == ctx.apply_d(3, reduce_vec(x3, m)));
            CHECK(reduce_vec(ctx.apply_h(2, x3), m) == ctx.apply_h(2, reduce_vec(x3, m)));
            PrismElement x4 = ctx.zero(4, {0});
            for (auto& v : x4.vec) v = int64_t(rng() % 9) - 4;
            CHECK(reduce_vec(ctx.apply_h(3, x4), m) == ctx.apply_h(3, reduce_vec(x4, m)));
        }
    }
}

TEST_CASE("mod-9 group ring identity suite") {
    auto rep = verify_facts_4_1();
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("mod-9 kappa congruence suite") {
    PrismContext ctx(3);
    auto rep = verify_theorem_4_6_congruences(ctx.kappa());
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("two-variant exact sequence of the t1 t2 multiplication map") {
    for (int p : {3, 5}) {
        auto rep = verify_lemma_2_1(p);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("malformed constrained slots are rejected") {
    PrismContext ctx(3);
    GroupRingElement z(3, CoefficientRing{0});
    auto one = GroupRingElement::one(3, {0});
    CHECK_THROWS_AS(ctx.m3(z, z, one, z), std::invalid_argument);  // 1 not in Z[G]T3
    CHECK_THROWS_AS(ctx.m3(z, z, z, one), std::invalid_argument);
}
