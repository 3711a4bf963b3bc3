#include <doctest.h>

#include <stdexcept>

#include "prism/finite_group.hpp"

using namespace prism;

TEST_CASE("builtin groups satisfy the axioms") {
    for (const char* name : {"c9", "c3xc3", "c9xc3", "c9xc9", "c27"}) {
        FiniteGroup g = FiniteGroup::builtin(name);
        CHECK(g.order() > 0);  // construction validates associativity etc.
        CHECK(g.mul(g.identity(), 0) == 0);
        for (int a = 0; a < g.order(); ++a) CHECK(g.mul(a, g.inverse(a)) == g.identity());
    }
    CHECK(FiniteGroup::builtin("c9xc9").order() == 81);
}

TEST_CASE("bad tables are rejected") {
    // constant table: no identity
    CHECK_THROWS_AS(FiniteGroup(std::vector<int>(9, 0)), std::invalid_argument);
}

TEST_CASE("character lifts") {
    FiniteGroup c9 = FiniteGroup::builtin("c9");
    std::vector<int> v(9);
    for (int a = 0; a < 9; ++a) v[a] = a % 3;
    Character theta(&c9, v);
    REQUIRE(theta.has_lift());
    for (int a = 0; a < 9; ++a) CHECK(theta.lift()[a] % 3 == a % 3);

    FiniteGroup c3c3 = FiniteGroup::builtin("c3xc3");
    std::vector<int> w(9);
    for (int a = 0; a < 9; ++a) w[a] = a / 3;
    Character proj(&c3c3, w);
    CHECK(!proj.has_lift());  // exponent-3 group

    FiniteGroup c9c9 = FiniteGroup::builtin("c9xc9");
    std::vector<int> x1(81), x2(81);
    for (int a = 0; a < 81; ++a) {
        x1[a] = (a / 9) % 3;
        x2[a] = a % 3;
    }
    CHECK(Character(&c9c9, x1).has_lift());
    CHECK(Character(&c9c9, x2).has_lift());

    FiniteGroup c9c3 = FiniteGroup::builtin("c9xc3");
    std::vector<int> y(27);
    for (int a = 0; a < 27; ++a) y[a] = a % 3;  // the C3 projection
    CHECK(!Character(&c9c3, y).has_lift());
}

TEST_CASE("non-homomorphisms are rejected") {
    FiniteGroup c9 = FiniteGroup::builtin("c9");
    std::vector<int> v(9, 0);
    v[1] = 1;
    CHECK_THROWS_AS(Character(&c9, v), std::invalid_argument);
}

TEST_CASE("s function values") {
    FiniteGroup c9 = FiniteGroup::builtin("c9");
    std::vector<int> v(9);
    for (int a = 0; a < 9; ++a) v[a] = a % 3;
    Character theta(&c9, v);
    ScalarFunction s = s_theta(theta);
    CHECK(s.values[0] == 0);  // identity
    CHECK(s.values[5] == 1);  // floor(5/3) = 1
    CHECK(s.values[8] == 2);
    CHECK(lambda2_residue(0, 3) == 0);
    CHECK(lambda2_residue(1, 3) == 0);
    CHECK(lambda2_residue(2, 3) == 1);
}

TEST_CASE("kernel indices of theta and its lift") {
    FiniteGroup c9c9 = FiniteGroup::builtin("c9xc9");
    std::vector<int> v(81);
    for (int a = 0; a < 81; ++a) v[a] = (a / 9) % 3;
    Character theta(&c9c9, v);
    Subgroup k3 = kernel_subgroup(c9c9, theta.values());
    CHECK(c9c9.order() / k3.group.order() == 3);
    Subgroup k9 = kernel_subgroup(c9c9, theta.lift());
    CHECK(c9c9.order() / k9.group.order() == 9);
}

TEST_CASE("scalar zoo decompositions") {
    auto first_coord = [](const FiniteGroup& g, int block) {
        std::vector<int> v(g.order());
        for (int a = 0; a < g.order(); ++a) v[a] = (a / block) % 3;
        return v;
    };
    {
        FiniteGroup g = FiniteGroup::builtin("c9");
        std::vector<int> v(9);
        for (int a = 0; a < 9; ++a) v[a] = a % 3;
        auto rep = verify_scalar_zoo(g, Character(&g, v));
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
    {
        FiniteGroup g = FiniteGroup::builtin("c9xc3");
        auto rep = verify_scalar_zoo(g, Character(&g, first_coord(g, 3)));
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
    {
        FiniteGroup g = FiniteGroup::builtin("c9xc9");
        auto rep = verify_scalar_zoo(g, Character(&g, first_coord(g, 9)));
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
    {
        FiniteGroup g = FiniteGroup::builtin("c27");
        std::vector<int> v(27);
        for (int a = 0; a < 27; ++a) v[a] = a % 3;
        auto rep = verify_scalar_zoo(g, Character(&g, v));
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("group json round trip") {
    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    FiniteGroup h = FiniteGroup::from_json(g.to_json());
    CHECK(h.order() == 9);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) CHECK(g.mul(a, b) == h.mul(a, b));
}
