#include <doctest.h>

#include <random>

#include "prism/group_ring.hpp"

using namespace prism;

namespace {

GroupRingElement random_element(std::mt19937& rng, int p, CoefficientRing ring) {
    std::uniform_int_distribution<int64_t> d(ring.modulus ? 0 : -9, ring.modulus ? ring.modulus - 1 : 9);
    GroupRingElement x(p, ring);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) x.set_coeff(i, j, d(rng));
    return x;
}

}  // namespace

TEST_CASE("additive identity and t1 + 1 = tau1") {
    for (int p : {3, 5, 7}) {
        auto se = SpecialElements::make(p, {0});
        auto a = se.t_(1) * se.T_(2);
        CHECK(a + GroupRingElement::zero(p, {0}) == a);
        CHECK(se.t_(1) + GroupRingElement::one(p, {0}) == se.tau_(1));
    }
}

TEST_CASE("t1^3 + 3(t1 + t1^2) vanishes mod 9") {
    auto se = SpecialElements::make(3, {9});
    auto lhs = se.t_(1).pow(3) + (se.t_(1) + se.t_(1).pow(2)) * 3;
    CHECK(lhs.is_zero());
}

TEST_CASE("trace element identities") {
    for (int p : {3, 5, 7}) {
        auto se = SpecialElements::make(p, {0});
        CHECK(se.T_(1) * se.T_(1) == se.T_(1) * p);            // T_i^2 = p T_i
        CHECK(se.t_(1) * se.T_(1) == GroupRingElement(p, {0}));  // t_i T_i = 0
        CHECK(se.T_(1) * se.T_(2) == se.TG);                   // T_i T_j = T_G
        for (int k = 3; k <= p + 1; ++k) {
            CHECK(se.t_(k) * se.T_(k) == GroupRingElement(p, {0}));
            CHECK(se.T_(k) * se.T_(1) == se.TG);
        }
        // t_i^(p-1) = T_i mod p but not over Z
        auto diff = se.t_(1).pow(p - 1) - se.T_(1);
        CHECK(!diff.is_zero());
        CHECK(diff.reduced_to({p}).is_zero());
    }
}

TEST_CASE("left action") {
    auto se = SpecialElements::make(3, {0});
    auto a = random_element(*new std::mt19937(5), 3, {0});
    CHECK(a.acted(0, 0) == a);
    CHECK(GroupRingElement::one(3, {0}).acted(1, 0) == se.tau_(1));
    // tau1 tau2 fixes T_3
    CHECK(se.T_(3).acted(1, 1) == se.T_(3));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(99);
    for (int p : {3, 5, 7}) {
        for (int64_t m : {int64_t(0), int64_t(p), int64_t(p) * p}) {
            CoefficientRing ring{m};
            for (int it = 0; it < 200; ++it) {
                auto a = random_element(rng, p, ring);
                auto b = random_element(rng, p, ring);
                auto c = random_element(rng, p, ring);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * b == b * a);
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
}

TEST_CASE("T_G absorbs: T_G x = aug(x) T_G") {
    std::mt19937 rng(123);
    for (int p : {3, 5}) {
        auto se = SpecialElements::make(p, {0});
        for (int it = 0; it < 100; ++it) {
            auto x = random_element(rng, p, {0});
            CHECK(se.TG * x == se.TG * x.augmentation());
        }
    }
}

TEST_CASE("reduction commutes with multiplication") {
    std::mt19937 rng(321);
    for (int p : {3, 5, 7}) {
        for (int it = 0; it < 50; ++it) {
            auto a = random_element(rng, p, {0});
            auto b = random_element(rng, p, {0});
            CHECK((a * b).reduced_to({p}) == a.reduced_to({p}) * b.reduced_to({p}));
            auto a2 = random_element(rng, p, {int64_t(p) * p});
            auto b2 = random_element(rng, p, {int64_t(p) * p});
            CHECK((a2 * b2).reduced_to({p}) == a2.reduced_to({p}) * b2.reduced_to({p}));
        }
    }
}

TEST_CASE("ring/prime mismatch raises") {
    auto a = GroupRingElement::one(3, {0});
    auto b = GroupRingElement::one(3, {3});
    auto c = GroupRingElement::one(5, {0});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("json round trip and printer") {
    auto se = SpecialElements::make(3, {0});
    auto x = se.t_(1) * se.T_(2) - se.TG * 2;
    auto s = to_json_array(x);
    CHECK(from_json_array(3, {0}, s) == x);
    CHECK(GroupRingElement::monomial(3, {0}, 1, 2, -3).to_string() == "-3*x1*x2^2");
    CHECK(GroupRingElement(3, {0}).to_string() == "0");
    CHECK(GroupRingElement::one(3, {0}).to_string() == "1");
}

TEST_CASE("overflow is detected, not wrapped") {
    GroupRingElement big(3, {0});
    big.set_coeff(0, 0, int64_t(1) << 62);
    CHECK_THROWS_AS(big * big, OverflowError);
}
