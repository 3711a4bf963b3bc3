#include <doctest.h>

#include <random>

#include "prism/cochain.hpp"
#include "prism/cochain_systems.hpp"

using namespace prism;

namespace {

Character first_char(const FiniteGroup& g, const std::string& name) {
    return canonical_pair(g, name).first;
}

}  // namespace

TEST_CASE("delta of a degree-0 constant") {
    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    Cochain c = constant_cochain(g, z3, 0, {2});
    CHECK(delta(c).is_zero());  // trivial action
    // nontrivial action: delta of a constant need not vanish
    auto [c1, c2] = canonical_pair(g, "c3xc3");
    CoefficientModule zg = CoefficientModule::group_ring(g, 3, c1, c2);
    std::vector<uint8_t> one(9, 0);
    one[0] = 1;
    Cochain cg = constant_cochain(g, zg, 0, one);
    CHECK(!delta(cg).is_zero());
}

TEST_CASE("delta squared vanishes") {
    std::mt19937 rng(11);
    for (const char* name : {"c3xc3", "c9"}) {
        FiniteGroup g = FiniteGroup::builtin(name);
        auto [c1, c2] = canonical_pair(g, name);
        for (uint8_t m : {uint8_t(3), uint8_t(9)}) {
            CoefficientModule triv = CoefficientModule::trivial_module(g, m);
            CoefficientModule zg = CoefficientModule::group_ring(g, m, c1, c2);
            CoefficientModule zt = CoefficientModule::tau_ring_packed(g, m, c1);
            for (const auto& mod : {triv, zg, zt}) {
                CHECK(mod.action_is_consistent());
                for (int deg : {1, 2}) {
                    for (int it = 0; it < 10; ++it) {
                        Cochain f = random_cochain(g, deg, mod, rng);
                        CHECK(delta(delta(f)).is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("product rule for the separated product") {
    std::mt19937 rng(13);
    FiniteGroup g = FiniteGroup::builtin("c9");
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    for (int it = 0; it < 100; ++it) {
        Cochain x = random_cochain(g, 1, z3, rng);
        Cochain y = random_cochain(g, 1, z3, rng);
        // delta(x y') = (delta x) y'' - x (delta y)'
        CHECK(delta(sep_product(x, y)) ==
              sep_product(delta(x), y) - sep_product(x, delta(y)));
    }
    // zero right factor annihilates
    Cochain x = random_cochain(g, 1, z3, rng);
    CHECK(sep_product(x, zero_cochain(g, 1, z3)).is_zero());
    // modulus mismatch
    CoefficientModule z9 = CoefficientModule::trivial_module(g, 9);
    CHECK_THROWS_AS(sep_product(x, zero_cochain(g, 1, z9)), std::invalid_argument);
}

TEST_CASE("delta matrix stream agrees with delta") {
    std::mt19937 rng(17);
    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    auto [c1, c2] = canonical_pair(g, "c3xc3");
    CoefficientModule zg = CoefficientModule::group_ring(g, 3, c1, c2);
    Cochain f = random_cochain(g, 1, zg, rng);
    Cochain df = delta(f);
    delta_matrix_stream(g, 1, zg, [&](size_t out_coord, const std::vector<uint8_t>& row) {
        int acc = 0;
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c]) acc += row[c] * f.values()[c];
        CHECK(uint8_t(acc % 3) == df.values()[out_coord]);
    });
}

TEST_CASE("solve_delta finds preimages of coboundaries") {
    std::mt19937 rng(19);
    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    for (int it = 0; it < 10; ++it) {
        Cochain y = random_cochain(g, 1, z3, rng);
        Cochain target = delta(y);
        auto sol = solve_delta(target);
        REQUIRE(sol.has_value());
        CHECK(delta(*sol) == target);
        CHECK(is_coboundary(target));
    }
}

TEST_CASE("scalar coboundary identity suite on c9 and c9xc3") {
    for (const char* name : {"c9", "c9xc3"}) {
        FiniteGroup g = FiniteGroup::builtin(name);
        Character theta = first_char(g, name);
        REQUIRE(theta.has_lift());
        auto rep = verify_lemma_3_5(g, theta);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("unitriangular representation") {
    auto rep = verify_matrix_rep();
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("packed cocycle criteria on c9") {
    FiniteGroup g = FiniteGroup::builtin("c9");
    Character theta = first_char(g, "c9");
    auto rep = theorem_3_7_checks(g, theta, 2, 20240812);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("cochain size cap is enforced") {
    FiniteGroup g = FiniteGroup::builtin("c9xc9");
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    CHECK_THROWS_AS(Cochain(&g, 5, z3), std::invalid_argument);
}
