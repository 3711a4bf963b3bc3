#include <doctest.h>

#include "prism/m4_structure.hpp"

using namespace prism;

TEST_CASE("catalog counts") {
    PrismContext c3(3);
    CHECK(c3.catalog().a_count() == 15);
    CHECK(c3.catalog().d_count() == 9);
    CHECK(c3.catalog().d2.rows() == 0);  // J3 empty at p=3
    PrismContext c5(5);
    CHECK(c5.catalog().a_count() == 35);
    CHECK(c5.catalog().d_count() == 25);
}

TEST_CASE("basis verification p=3 and p=5") {
    for (int p : {3, 5}) {
        PrismContext ctx(p);
        auto rep = verify_basis(ctx);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("pi4 values") {
    PrismContext ctx(3);
    const auto& se = ctx.special({0});
    GroupRingElement z(3, CoefficientRing{0});
    PrismElement beta3 = ctx.m4_class(ctx.m3(z, z, se.T_(3), z));
    CHECK(pi4(ctx, beta3) == 1);
    PrismElement beta4 = ctx.m4_class(ctx.m3(z, z, z, se.T_(4)));
    CHECK(pi4(ctx, beta4) == -1);
    PrismElement alpha1 = ctx.m4_class(ctx.m3(GroupRingElement::one(3, {0}), z, z, z));
    CHECK(pi4(ctx, alpha1) == 0);
}

TEST_CASE("pi4 short exact sequence") {
    PrismContext c3(3);
    for (int64_t m : {int64_t(0), int64_t(3)}) {
        auto rep = verify_ses_2_4(c3, m);
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
    PrismContext c5(5);
    auto rep = verify_ses_2_4(c5, 0);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("d2-image combinatorics p=3") {
    PrismContext ctx(3);
    auto rep = verify_cor_2_5_2_6_2_7(ctx);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("M4 relations at p=3") {
    PrismContext ctx(3);
    auto rep = relations_p3(ctx);
    INFO(rep.to_text());
    CHECK(rep.ok());
}
