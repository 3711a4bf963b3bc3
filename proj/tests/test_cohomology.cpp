#include <doctest.h>

#include <random>

#include "prism/cohomology.hpp"

using namespace prism;

namespace {

struct Setup {
    FiniteGroup g;
    Character chi1, chi2;
    Setup(const std::string& name)
        : g(FiniteGroup::builtin(name)),
          chi1(canonical_pair(g, name).first),
          chi2(canonical_pair(g, name).second) {}
};

}  // namespace

TEST_CASE("trivial-coefficient dimensions") {
    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    CHECK(cohomology(g, z3, 0).dim() == 1);
    CHECK(cohomology(g, z3, 1).dim() == 2);
    CHECK(cohomology(g, z3, 2).dim() == 3);
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    CoefficientModule z3c = CoefficientModule::trivial_module(c3, 3);
    CHECK(cohomology(c3, z3c, 0).dim() == 1);
    CHECK(cohomology(c3, z3c, 1).dim() == 1);
    CHECK(cohomology(c3, z3c, 2).dim() == 1);
}

TEST_CASE("projection and class arithmetic") {
    std::mt19937 rng(5);
    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    CohomologySpace h1(g, z3, 1);
    for (int i = 0; i < h1.dim(); ++i) {
        auto coords = h1.project(h1.representative(i));
        for (int j = 0; j < h1.dim(); ++j) CHECK(coords[j] == (i == j ? 1 : 0));
    }
    Cochain y = random_cochain(g, 0, z3, rng);
    CHECK(h1.is_zero_class(delta(y)));
}

TEST_CASE("bar-complex dimensions match the coinduced predictions") {
    Setup s("c3xc3");
    PrismContext ctx(3);
    for (int k : {1, 2, 3}) {
        for (int n : {0, 1, 2}) {
            CoefficientModule mod = CoefficientModule::prism_module(s.g, 3, k, ctx, s.chi1, s.chi2);
            int direct = cohomology(s.g, mod, n).dim();
            int predicted = shapiro_predicted_dim(s.g, k, n, ctx, s.chi1, s.chi2);
            INFO("module ", k, " degree ", n);
            CHECK(direct == predicted);
        }
    }
}

TEST_CASE("shapiro class-vanishing agrees with the direct test") {
    Setup s("c3xc3");
    PrismContext ctx(3);
    std::mt19937 rng(99);
    CoefficientModule m3 = CoefficientModule::prism_module(s.g, 3, 3, ctx, s.chi1, s.chi2);
    CohomologySpace h1(s.g, m3, 1);
    auto pieces = shapiro_pieces(s.g, 3, ctx, s.chi1, s.chi2);
    Cochain y = random_cochain(s.g, 0, m3, rng);
    CHECK(class_vanishes_by_shapiro(delta(y), pieces));
    for (int i = 0; i < h1.dim(); ++i) {
        Cochain z = h1.representative(i);
        CHECK(h1.is_zero_class(z) == class_vanishes_by_shapiro(z, pieces));
    }
    for (int it = 0; it < 10; ++it) {
        Cochain z = zero_cochain(s.g, 1, m3);
        for (int i = 0; i < h1.dim(); ++i)
            if (rng() % 2) z += h1.representative(i);
        z += delta(random_cochain(s.g, 0, m3, rng));
        CHECK(h1.is_zero_class(z) == class_vanishes_by_shapiro(z, pieces));
    }
}

TEST_CASE("restriction and degree-1 coinduction") {
    for (const char* name : {"c3xc3", "c9xc9"}) {
        Setup s(name);
        auto rep = shapiro_maps_report(s.g, s.chi1, 424242);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("bockstein lift independence and the classical nonvanishing") {
    std::mt19937 rng(2024);
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    CoefficientModule z3 = CoefficientModule::trivial_module(c3, 3);
    CoefficientModule z9 = CoefficientModule::trivial_module(c3, 9);
    Cochain theta(&c3, 1, z3);
    for (int a = 0; a < 3; ++a) theta.at(a)[0] = uint8_t(a);
    REQUIRE(delta(theta).is_zero());
    Cochain b = bockstein(theta, z9, rng);
    CHECK(delta(b).is_zero());
    CohomologySpace h2(c3, z3, 2);
    CHECK(!h2.is_zero_class(b));  // finite groups sit outside the theory's hypotheses

    FiniteGroup g = FiniteGroup::builtin("c3xc3");
    CoefficientModule gz3 = CoefficientModule::trivial_module(g, 3);
    CoefficientModule gz9 = CoefficientModule::trivial_module(g, 9);
    CohomologySpace h1(g, gz3, 1);
    for (int it = 0; it < 20; ++it) {
        Cochain z = zero_cochain(g, 1, gz3);
        for (int i = 0; i < h1.dim(); ++i)
            if (rng() % 2) z += h1.representative(i);
        z += delta(random_cochain(g, 0, gz3, rng));
        Cochain b1 = bockstein(z, gz9, rng);  // throws if lift-dependent
        CHECK(delta(b1).is_zero());
    }
    Cochain bb = bockstein(b, z9, rng);
    CohomologySpace h3(c3, z3, 3);
    CHECK(h3.is_zero_class(bb));
}

TEST_CASE("bockstein naturality along d3") {
    Setup s("c3xc3");
    PrismContext ctx(3);
    std::mt19937 rng(31);
    CoefficientModule m33 = CoefficientModule::prism_module(s.g, 3, 3, ctx, s.chi1, s.chi2);
    CoefficientModule m39 = CoefficientModule::prism_module(s.g, 9, 3, ctx, s.chi1, s.chi2);
    CoefficientModule m43 = CoefficientModule::prism_module(s.g, 3, 4, ctx, s.chi1, s.chi2);
    CoefficientModule m49 = CoefficientModule::prism_module(s.g, 9, 4, ctx, s.chi1, s.chi2);
    CohomologySpace h1(s.g, m33, 1);
    IntMatrix d3m = ctx.d_matrix(3);
    CohomologySpace h2m4(s.g, m43, 2);
    auto push = [&](const Cochain& z, const CoefficientModule& target) {
        Cochain out(&s.g, z.degree(), target);
        for (size_t t = 0; t < z.tuples(); ++t)
            for (int r = 0; r < ctx.dim(4); ++r) {
                int acc = 0;
                for (int c = 0; c < ctx.dim(3); ++c)
                    acc += int(((d3m(r, c) % 3) + 3) % 3) * z.at(t)[c];
                out.at(t)[r] = uint8_t(acc % 3);
            }
        return out;
    };
    int checked = 0;
    for (int i = 0; i < h1.dim() && checked < 10; ++i, ++checked) {
        Cochain z = h1.representative(i);
        Cochain lhs = bockstein(push(z, m43), m49, rng);
        Cochain rhs = push(bockstein(z, m39, rng), m43);
        CHECK(h2m4.is_zero_class(lhs - rhs));
    }
    CHECK(checked > 0);
}

TEST_CASE("dec subgroup") {
    Setup s("c3xc3");
    CoefficientModule z3 = CoefficientModule::trivial_module(s.g, 3);
    CohomologySpace h1(s.g, z3, 1);
    CohomologySpace h2(s.g, z3, 2);
    DecSubgroup dec = dec_subgroup(h2, h1, s.chi1, s.chi2);
    CHECK(dec.dim() >= 1);
    Cochain c1 = scalar_cochain(s.g, ScalarFunction{&s.g, 3, s.chi1.values()});
    CHECK(dec.contains(h2.project(sep_product(c1, c1))));
    std::vector<int> elems;
    for (int a = 0; a < s.g.order(); ++a)
        if (s.chi1(a) == 0 && s.chi2(a) == 0) elems.push_back(a);
    Subgroup h = make_subgroup(s.g, elems);
    for (int i = 0; i < h1.dim(); ++i)
        for (const Character* c : {&s.chi1, &s.chi2}) {
            Cochain cc = scalar_cochain(s.g, ScalarFunction{&s.g, 3, c->values()});
            CHECK(restricts_to_coboundary(sep_product(cc, h1.representative(i)), h));
        }
    EchelonMod span(h1.dim(), 3);
    Cochain c2 = scalar_cochain(s.g, ScalarFunction{&s.g, 3, s.chi2.values()});
    span.add_row(h1.project(c1));
    span.add_row(h1.project(c2));
    CHECK(span.rank() == 2);
    CHECK_THROWS_AS(dec_subgroup(h2, h1, s.chi1, s.chi1), std::invalid_argument);
}

TEST_CASE("obstruction spaces on c3xc3") {
    Setup s("c3xc3");
    ObstructionSpaces obs = obstruction_spaces(s.g, 2, s.chi1, s.chi2);
    CHECK(obs.dim_x >= 0);
    CHECK(obs.dim_n3 <= obs.dim_x);
    CHECK(obs.dim_n4 <= obs.dim_x);
    CHECK(obs.dim_o == obs.dim_x - obs.dim_sum);
    PrismContext ctx(3);
    for (const auto& chi : obs.n3_basis) CHECK(norm_lift(ctx, s.g, s.chi1, s.chi2, 3, chi).has_value());
    for (const auto& chi : obs.n4_basis) CHECK(norm_lift(ctx, s.g, s.chi1, s.chi2, 4, chi).has_value());
    INFO("dims: X=", obs.dim_x, " N3=", obs.dim_n3, " N4=", obs.dim_n4, " O=", obs.dim_o);
    CHECK(obs.dim_o >= 0);
}

TEST_CASE("pi4_bar on Dec-form inputs is zero in the quotient") {
    Setup s("c3xc3");
    PrismContext ctx(3);
    ObstructionSpaces obs = obstruction_spaces(s.g, 2, s.chi1, s.chi2);
    CoefficientModule z3 = CoefficientModule::trivial_module(s.g, 3);
    CohomologySpace h1(s.g, z3, 1);
    CoefficientModule zg = CoefficientModule::group_ring(s.g, 3, s.chi1, s.chi2);
    const auto& se = ctx.special({3});
    auto vec = [&](const GroupRingElement& x) {
        std::vector<uint8_t> out(9);
        for (int k = 0; k < 9; ++k) out[k] = uint8_t(x.coeff_at(k));
        return out;
    };
    Cochain chi3 = h1.representative(0);
    Cochain u = tensor_ring(chi3, zg, vec(se.t_(2) * se.t_(2)));
    Cochain v = zero_cochain(s.g, 1, zg);
    Cochain chi = zero_cochain(s.g, 1, z3);
    EtaResult res = eta_pipeline(ctx, s.g, s.chi1, s.chi2, u, v, chi);
    OClass oc = pi4_bar(ctx, obs, h1, res.c);
    CHECK(oc.in_x);
    CHECK(oc.zero_in_o);
}

TEST_CASE("eta restriction vanishes on the joint kernel subgroup") {
    Setup s("c9xc9");
    PrismContext ctx(3);
    std::mt19937 rng(23);
    CoefficientModule zg = CoefficientModule::group_ring(s.g, 3, s.chi1, s.chi2);
    std::vector<int> elems;
    for (int a = 0; a < s.g.order(); ++a)
        if (s.chi1(a) == 0 && s.chi2(a) == 0) elems.push_back(a);
    Subgroup h = make_subgroup(s.g, elems);
    CHECK(h.group.order() == 9);
    const auto& se = ctx.special({3});
    auto mono = [&](int a, int b) {
        auto w = (se.t_(1).pow(a) * se.t_(2).pow(b)).coeffs();
        std::vector<uint8_t> out(9);
        for (int k = 0; k < 9; ++k) out[k] = uint8_t(w[k]);
        return out;
    };
    for (int it = 0; it < 3; ++it) {
        UVSystem uv = random_valid_uv(s.g, s.chi1, s.chi2, 2, rng);
        Cochain u = tensor_ring(uv.u.u00, zg, mono(0, 0));
        u += tensor_ring(uv.u.u10, zg, mono(1, 0));
        u += tensor_ring(uv.u.u01, zg, mono(0, 1));
        u += tensor_ring(uv.u.u20, zg, mono(2, 0));
        u += tensor_ring(uv.u.u11, zg, mono(1, 1));
        u += tensor_ring(uv.u.u02, zg, mono(0, 2));
        u += tensor_ring(uv.u.u21, zg, mono(2, 1));
        u += tensor_ring(uv.u.u12, zg, mono(1, 2));
        u += tensor_ring(uv.u.u22, zg, mono(2, 2));
        Cochain v = tensor_ring(uv.v.u00, zg, mono(0, 0));
        v += tensor_ring(uv.v.u10, zg, mono(0, 1));
        v += tensor_ring(uv.v.u01, zg, mono(1, 0));
        v += tensor_ring(uv.v.u20, zg, mono(0, 2));
        v += tensor_ring(uv.v.u11, zg, mono(1, 1));
        v += tensor_ring(uv.v.u02, zg, mono(2, 0));
        v += tensor_ring(uv.v.u21, zg, mono(1, 2));
        v += tensor_ring(uv.v.u12, zg, mono(2, 1));
        v += tensor_ring(uv.v.u22, zg, mono(2, 2));
        EtaResult res = eta_pipeline(ctx, s.g, s.chi1, s.chi2, u, v, uv.u.chi);
        CHECK(restricts_to_coboundary(res.eta, h));
    }
}

TEST_CASE("h3 bockstein report runs on c3xc3") {
    Setup s("c3xc3");
    PrismContext ctx(3);
    auto rep = h3_bockstein_report(ctx, s.g, s.chi1, s.chi2, 1, 777);
    INFO(rep.to_text());
    CHECK(rep.ok());  // verdicts are report-only; only machinery checks may fail
}

TEST_CASE("six-term report runs on c3xc3 at n = 1 and 2") {
    Setup s("c3xc3");
    PrismContext ctx(3);
    for (int n : {1, 2}) {
        auto rep = six_term_report(ctx, s.g, s.chi1, s.chi2, n, 99);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}
