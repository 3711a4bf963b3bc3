#include "prism/m4_structure.hpp"

#include <random>

namespace prism {

namespace {

IntMatrix rows_from(const std::vector<PrismElement>& elems, int cols) {
    IntMatrix m(int(elems.size()), cols);
    for (size_t r = 0; r < elems.size(); ++r) {
        std::vector<int64_t> v(elems[r].vec.begin(), elems[r].vec.end());
        m.set_row(int(r), v);
    }
    return m;
}

IntMatrix stack(const std::vector<IntMatrix>& parts) {
    int rows = 0, cols = parts.front().cols();
    for (const auto& m : parts) rows += m.rows();
    IntMatrix out(rows, cols);
    int r = 0;
    for (const auto& m : parts)
        for (int i = 0; i < m.rows(); ++i) out.set_row(r++, m.row(i));
    return out;
}

// all G-translates of an M3/M4 element, as lattice rows
IntMatrix orbit_rows(const PrismContext& ctx, const PrismElement& x) {
    std::vector<PrismElement> elems;
    for (int i = 0; i < ctx.p(); ++i)
        for (int j = 0; j < ctx.p(); ++j) elems.push_back(ctx.act(i, j, x));
    return rows_from(elems, int(x.vec.size()));
}

}  // namespace

BasisCatalog build_catalog(const PrismContext& ctx) {
    const int p = ctx.p();
    const auto& se = ctx.special({0});
    GroupRingElement z(p, CoefficientRing{0});
    auto mono = [&](int i, int j) { return GroupRingElement::monomial(p, {0}, i, j); };

    BasisCatalog cat;
    cat.p = p;
    for (int i = 0; i <= p - 2; ++i)
        for (int j = 0; j <= p - 1; ++j) cat.j2.emplace_back(i, j);
    cat.j2.emplace_back(p - 1, 0);
    for (int l = 0; l <= p - 1; ++l) cat.j1.emplace_back(0, l);
    for (int k = 1; k <= 2; ++k)
        for (int l = 0; l <= p - 2; ++l) cat.j1.emplace_back(k, l);
    for (int i = 0; i <= p - 4; ++i)
        for (int j = 0; j <= p - 1; ++j) cat.j3.emplace_back(i, j);
    for (int i = 0; i <= p - 4; ++i)
        for (int j = 0; j <= p - 2; ++j) cat.j3p.emplace_back(i, j);

    std::vector<PrismElement> a1, a2, a3;
    for (auto [i, j] : cat.j2) a1.push_back(ctx.m3(z, mono(i, j), z, z));
    for (auto [k, l] : cat.j1) a2.push_back(ctx.m3(mono(k, l), z, z, z));
    a3.push_back(ctx.m3(z, z, z, se.T_(p + 1)));

    auto d2 = [&](const GroupRingElement& eta, int64_t n) {
        return ctx.apply_d(2, ctx.m2(eta, n));
    };
    std::vector<PrismElement> d1v, d2v, d3v, d4v, d5v, d6v;
    for (int k = 1; k <= p - 1; ++k) {
        GroupRingElement pre(p, CoefficientRing{0});
        for (int j = 0; j < k; ++j) pre += mono(0, j);
        d1v.push_back(d2(-(pre * se.T_(1)), k));
    }
    GroupRingElement t3t4 = se.t_(3) * se.t_(p + 1);
    for (auto [i, j] : cat.j3) d2v.push_back(d2(mono(i, j) * t3t4, 0));
    d3v.push_back(d2(-se.T_(2), 1));
    d3v.push_back(d2(-((se.tau_(1) + GroupRingElement::one(p, {0})) * se.T_(2)), 2));
    for (int l = 1; l <= p - 1; ++l) d4v.push_back(d2(se.tau_(3).pow(l) - GroupRingElement::one(p, {0}), 0));
    for (int l = 1; l <= p - 1; ++l)
        d5v.push_back(d2(se.tau_(p + 1).pow(l) - GroupRingElement::one(p, {0}), 0));
    d6v.push_back(d2(GroupRingElement::one(p, {0}), 0));

    const int n3 = ctx.dim(3);
    cat.a1 = rows_from(a1, n3);
    cat.a2 = rows_from(a2, n3);
    cat.a3 = rows_from(a3, n3);
    cat.d1 = rows_from(d1v, n3);
    cat.d2 = rows_from(d2v, n3);
    cat.d3 = rows_from(d3v, n3);
    cat.d4 = rows_from(d4v, n3);
    cat.d5 = rows_from(d5v, n3);
    cat.d6 = rows_from(d6v, n3);
    cat.a_rows = stack({cat.a1, cat.a2, cat.a3});
    std::vector<IntMatrix> dparts;
    for (const auto* m : {&cat.d1, &cat.d2, &cat.d3, &cat.d4, &cat.d5, &cat.d6})
        if (m->rows() > 0) dparts.push_back(*m);
    cat.d_rows = stack(dparts);

    if (p == 3) {
        std::vector<PrismElement> a15, d9;
        for (auto [i, j] : std::vector<std::pair<int, int>>{
                 {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}})
            a15.push_back(ctx.m3(mono(i, j), z, z, z));
        for (auto [i, j] : std::vector<std::pair<int, int>>{
                 {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}})
            a15.push_back(ctx.m3(z, mono(i, j), z, z));
        a15.push_back(ctx.m3(z, z, se.T_(3), z));
        d9.push_back(d2(se.T_(2), -1));
        d9.push_back(d2(se.tau_(1) * se.T_(2), -1));
        d9.push_back(d2(se.T_(1), -1));
        d9.push_back(d2(se.tau_(2) * se.T_(1), -1));
        d9.push_back(d2(GroupRingElement::one(p, {0}), 0));
        d9.push_back(d2(se.tau_(3), 0));
        d9.push_back(d2(se.tau_(3).pow(2), 0));
        d9.push_back(d2(se.tau_(4), 0));
        d9.push_back(d2(se.tau_(4).pow(2), 0));
        cat.a_rows_p3 = rows_from(a15, n3);
        cat.d_rows_p3 = rows_from(d9, n3);
    }
    return cat;
}

int64_t pi4_m3(const PrismContext& ctx, const PrismElement& x) {
    if (x.module != 3) throw std::invalid_argument("pi4 takes an M3 element");
    const int p = ctx.p();
    int64_t s = 0;
    for (int k = 0; k < p; ++k) s += x.vec[2 * p * p + k] - x.vec[2 * p * p + p + k];
    if (x.ring.modulus) s = ((s % x.ring.modulus) + x.ring.modulus) % x.ring.modulus;
    return s;
}

int64_t pi4(const PrismContext& ctx, const PrismElement& x) {
    if (x.module == 3) return pi4_m3(ctx, x);
    if (x.module != 4) throw std::invalid_argument("pi4 takes M3 or M4");
    return pi4_m3(ctx, ctx.m4_representative(x));
}

VerificationReport verify_basis(const PrismContext& ctx) {
    VerificationReport rep;
    const int p = ctx.p();
    rep.suite = "A/D basis catalog (p=" + std::to_string(p) + ")";
    const BasisCatalog& cat = ctx.catalog();
    rep.require("|A| == p^2 + 2p", cat.a_count() == p * p + 2 * p);
    rep.require("|D| == p^2", cat.d_count() == p * p);
    rep.require("|J2| + |J1| == p^2 + 2p - 1",
                int(cat.j2.size() + cat.j1.size()) == p * p + 2 * p - 1);
    IntMatrix cb = stack({cat.a_rows, cat.d_rows});
    if (p == 3) {
        int64_t d = det64(cb);
        rep.require("change-of-basis determinant == +-1", d == 1 || d == -1,
                    "det = " + std::to_string(d));
    }
    SnfResult s = smith_normal_form(cb);
    rep.require("A u D is a Z-basis of M3 (SNF divisors all 1)",
                s.rank == ctx.dim(3) && std::all_of(s.divisors.begin(), s.divisors.end(),
                                                    [](const BigInt& v) { return v == 1; }));
    Lattice dlat = lattice_from_rows(cat.d_rows);
    Lattice img2 = lattice_from_rows(ctx.d_matrix(2).transposed());
    rep.require("lattice(D) == d2(M2)", lattice_equal(dlat, img2));
    bool members = true;
    for (int r = 0; r < cat.d_rows.rows(); ++r)
        if (!lattice_membership(img2, cat.d_rows.row(r))) members = false;
    rep.require("every D vector lies in im d2", members);
    rep.require("(1,0,...,0) not in d2(M2)",
                !lattice_membership(img2, [&] {
                    std::vector<int64_t> e(ctx.dim(3), 0);
                    e[0] = 1;
                    return e;
                }()));
    // images of A are the M4 coordinate basis
    bool images = true;
    for (int i = 0; i < cat.a_rows.rows(); ++i) {
        PrismElement a{3, p, {0}, cat.a_rows.row(i)};
        PrismElement cls = ctx.m4_class(a);
        for (int c = 0; c < ctx.dim(4); ++c)
            if (cls.vec[c] != (c == i ? 1 : 0)) images = false;
    }
    rep.require("classes of A form the M4 coordinate basis", images);
    if (p == 3) {
        IntMatrix cb3 = stack({cat.a_rows_p3, cat.d_rows_p3});
        int64_t d3 = det64(cb3);
        rep.require("specialized fifteen-generator catalog is also a basis (det +-1)",
                    d3 == 1 || d3 == -1, "det = " + std::to_string(d3));
        rep.require("specialized |A| == 15 and |D| == 9",
                    cat.a_rows_p3.rows() == 15 && cat.d_rows_p3.rows() == 9);
        rep.require("specialized D spans the same lattice as the general D",
                    lattice_equal(lattice_from_rows(cat.d_rows_p3), dlat));
    }
    return rep;
}

VerificationReport verify_ses_2_4(const PrismContext& ctx, int64_t modulus) {
    VerificationReport rep;
    const int p = ctx.p();
    rep.suite = "pi4 short exact sequence (p=" + std::to_string(p) + ", mod " +
                std::to_string(modulus) + ")";
    const auto& se = ctx.special({0});
    GroupRingElement z(p, CoefficientRing{0});

    PrismElement alpha1 = ctx.m4_class(ctx.m3(GroupRingElement::one(p, {0}), z, z, z));
    PrismElement alpha2 = ctx.m4_class(ctx.m3(z, GroupRingElement::one(p, {0}), z, z));
    PrismElement beta3 = ctx.m4_class(ctx.m3(z, z, se.T_(3), z));

    rep.require("pi4(beta3) == 1 (surjectivity onto Z T_G)", pi4(ctx, beta3) == 1);
    rep.require("pi4(alpha1) == 0", pi4(ctx, alpha1) == 0);

    std::mt19937 rng(1234);
    std::uniform_int_distribution<int64_t> dist(-4, 4);
    bool d2zero = true;
    for (int it = 0; it < 20; ++it) {
        GroupRingElement eta(p, CoefficientRing{0});
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) eta.set_coeff(i, j, dist(rng));
        PrismElement y = ctx.apply_d(2, ctx.m2(eta, dist(rng)));
        if (pi4_m3(ctx, y) != 0) d2zero = false;
    }
    rep.require("pi4(d2(y)) == 0 on random y", d2zero);

    // section independence: perturb slot 3 by annihilator multiples t3 w
    bool section = true;
    for (int it = 0; it < 10; ++it) {
        GroupRingElement w(p, CoefficientRing{0});
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) w.set_coeff(i, j, dist(rng));
        GroupRingElement y3 = se.T_(3) * w;  // generic ideal element
        // two cofactors of y3 differ by ann(T_3) = (t_3); epsilon must agree
        int64_t a = (se.T_(3) * w).augmentation();  // p * aug(cofactor)
        PrismElement m = ctx.m3(z, z, y3, z);
        int64_t b = 0;
        for (int k = 0; k < p; ++k) b += m.vec[2 * p * p + k];
        if (a != int64_t(p) * b) section = false;
    }
    rep.require("slot-3 coset sum independent of cofactor choice", section);

    // pi4 is a module map into the trivial module
    bool modmap = true;
    for (int i = 0; i < p && modmap; ++i)
        for (int j = 0; j < p; ++j) {
            if (pi4(ctx, ctx.act(i, j, beta3)) != pi4(ctx, beta3) ||
                pi4(ctx, ctx.act(i, j, alpha1)) != pi4(ctx, alpha1)) {
                modmap = false;
                break;
            }
        }
    rep.require("pi4(g x) == pi4(x)", modmap);

    // kernel of pi4 == Z[G] alpha1 + Z[G] alpha2
    IntMatrix pim(1, ctx.dim(4));
    for (int c = 0; c < ctx.dim(4); ++c) {
        PrismElement e = ctx.zero(4, {0});
        e.vec[c] = 1;
        pim.set(0, c, pi4(ctx, e));
    }
    IntMatrix orbit = stack({orbit_rows(ctx, alpha1), orbit_rows(ctx, alpha2)});
    if (modulus == 0) {
        Lattice ker = lattice_from_rows(kernel_basis(pim));
        Lattice sub = lattice_from_rows(orbit);
        rep.require("ker pi4 == Z[G]a1 + Z[G]a2", lattice_equal(ker, sub));
        Lattice l1 = lattice_from_rows(orbit_rows(ctx, alpha1));
        Lattice l2 = lattice_from_rows(orbit_rows(ctx, alpha2));
        rep.require("rank Z[G]a_i == p^2 - p + 1",
                    l1.rank() == p * p - p + 1 && l2.rank() == p * p - p + 1);
        rep.require("rank of the sum == p^2 + 2p - 1", sub.rank() == p * p + 2 * p - 1);
        Lattice inter = lattice_intersection(l1, l2);
        if (p == 3) {
            // directness is a p=3 phenomenon: 2(p^2-p+1) = p^2+2p-1 only there
            rep.require("Z[G]a1 intersect Z[G]a2 == 0", inter.rank() == 0);
        } else {
            rep.require("intersection rank == 2(p^2-p+1) - (p^2+2p-1)",
                        inter.rank() == p * p - 4 * p + 3);
        }
    } else {
        IntMatrix kerm = kernel_basis(pim.with_modulus(modulus));
        rep.require("ker pi4 == span(a1,a2 orbits) (mod m)",
                    span_equal_mod(kerm, orbit.with_modulus(modulus)));
    }
    return rep;
}

VerificationReport verify_cor_2_5_2_6_2_7(const PrismContext& ctx) {
    VerificationReport rep;
    const int p = ctx.p();
    rep.suite = "d2-image combinatorics (p=" + std::to_string(p) + ")";
    const BasisCatalog& cat = ctx.catalog();
    const auto& se = ctx.special({0});
    GroupRingElement z(p, CoefficientRing{0});
    const int n3 = ctx.dim(3);

    // ---- mod-p span of d2 with zero slot 3 lands in span(D1..D4)
    {
        IntMatrix gens = ctx.d_matrix(2).transposed().with_modulus(p);  // rows generate im d2 mod p
        // kernel of (coeffs) -> slot3 block of the combination
        IntMatrix slot3map(p, gens.rows(), p);
        for (int r = 0; r < gens.rows(); ++r)
            for (int k = 0; k < p; ++k) slot3map.set(k, r, gens(r, 2 * p * p + k));
        IntMatrix coeffs = kernel_basis(slot3map);
        IntMatrix w(coeffs.rows(), n3, p);
        for (int r = 0; r < coeffs.rows(); ++r) w.set_row(r, gens.apply_left(coeffs.row(r)));
        std::vector<IntMatrix> d14parts;
        for (const auto* m : {&cat.d1, &cat.d2, &cat.d3, &cat.d4})
            if (m->rows() > 0) d14parts.push_back(*m);
        IntMatrix d14 = stack(d14parts).with_modulus(p);
        rep.require("zero-slot-3 part of d2(M2/p) == span(D1..D4) mod p", span_equal_mod(w, d14));
        // the slot-4 entries have the ((tau1 tau2)^k - 1) T_{p+1} form
        IntMatrix forms(p - 1, p, p);
        for (int k = 1; k <= p - 1; ++k) {
            PrismElement v = ctx.m3(z, z, z,
                                    (se.tau_(3).pow(k) - GroupRingElement::one(p, {0})) * se.T_(p + 1));
            for (int c = 0; c < p; ++c) forms.set(k - 1, c, ((v.vec[2 * p * p + p + c]) % p + p) % p);
        }
        IntMatrix slot4(w.rows(), p, p);
        for (int r = 0; r < w.rows(); ++r)
            for (int c = 0; c < p; ++c) slot4.set(r, c, w(r, 2 * p * p + p + c));
        rep.require("slot-4 parts are sums of ((tau1 tau2)^k - 1) T_{p+1}",
                    span_contains_mod(forms, slot4));
    }

    // ---- P == span(D1..D4) == d2(M2) cap (Z[G], Z[G], 0, Z[G]T_{p+1})
    {
        GroupRingElement t1T2 = se.t_(1) * se.T_(2);
        GroupRingElement T1t2 = se.T_(1) * se.t_(2);
        GroupRingElement t3 = se.t_(3);
        PrismElement g1 = ctx.m3(t1T2, z, z, z);
        PrismElement g2 = ctx.m3(z, T1t2, z, z);
        PrismElement g3 = ctx.m3(-(se.t_(1) * t3), -(se.t_(2) * t3), z, t3 * se.T_(p + 1));
        IntMatrix prows = stack({orbit_rows(ctx, g1), orbit_rows(ctx, g2), orbit_rows(ctx, g3)});
        Lattice plat = lattice_from_rows(prows);
        std::vector<IntMatrix> d14parts;
        for (const auto* m : {&cat.d1, &cat.d2, &cat.d3, &cat.d4})
            if (m->rows() > 0) d14parts.push_back(*m);
        Lattice d14 = lattice_from_rows(stack(d14parts));
        rep.require("P == Z-span(D1..D4)", lattice_equal(plat, d14));
        // subspace (Z[G], Z[G], 0, Z[G]T_{p+1}): unit vectors away from slot 3
        IntMatrix sub(n3 - p, n3);
        int r = 0;
        for (int c = 0; c < n3; ++c)
            if (c < 2 * p * p || c >= 2 * p * p + p) sub.set(r++, c, 1);
        Lattice inter =
            lattice_intersection(lattice_from_rows(ctx.d_matrix(2).transposed()), lattice_from_rows(sub));
        rep.require("P == d2(M2) cap (Z[G], Z[G], 0, Z[G]T_{p+1})", lattice_equal(plat, inter));
    }

    // ---- d2(M2) cap M_{3;00} == M_{3;00}, also mod 9 and mod 3
    {
        PrismElement h1v = ctx.m3(se.t_(1) * se.T_(2), z, z, z);
        PrismElement h2v = ctx.m3(z, se.T_(1) * se.t_(2), z, z);
        IntMatrix m300 = stack({orbit_rows(ctx, h1v), orbit_rows(ctx, h2v)});
        Lattice m300lat = lattice_from_rows(m300);
        Lattice img2 = lattice_from_rows(ctx.d_matrix(2).transposed());
        Lattice inter = lattice_intersection(img2, m300lat);
        rep.require("d2(M2) cap M_{3;00} == M_{3;00}", lattice_equal(inter, m300lat));
        // explicit preimage form {d2(e1 T1 + e2 T2, -(aug(e1+e2)) T_G)}
        std::vector<PrismElement> pre;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                GroupRingElement g = GroupRingElement::monomial(p, {0}, i, j);
                pre.push_back(ctx.apply_d(2, ctx.m2(g * se.T_(1), -1)));
                pre.push_back(ctx.apply_d(2, ctx.m2(g * se.T_(2), -1)));
            }
        rep.require("M_{3;00} == {d2(e1 T1 + e2 T2, -(e1+e2) T_G)}",
                    lattice_equal(lattice_from_rows(rows_from(pre, n3)), m300lat));
        for (int64_t m : {int64_t(p), int64_t(p) * p}) {
            bool contained = span_contains_mod(ctx.d_matrix(2).transposed().with_modulus(m),
                                               m300.with_modulus(m));
            rep.require("M_{3;00} inside d2(M2) mod " + std::to_string(m), contained);
        }
    }

    // ---- D0 = D1 u D2 u D3 is a basis of d2(M2) cap (Z[G], Z[G], 0, 0)
    {
        std::vector<IntMatrix> d0parts;
        for (const auto* m : {&cat.d1, &cat.d2, &cat.d3})
            if (m->rows() > 0) d0parts.push_back(*m);
        IntMatrix d0 = stack(d0parts);
        rep.require("|D0| == p^2 - 2p + 1", d0.rows() == p * p - 2 * p + 1);
        Lattice d0lat = lattice_from_rows(d0);
        rep.require("D0 rows are Z-independent", d0lat.rank() == d0.rows());
        IntMatrix sub(2 * p * p, n3);
        for (int c = 0; c < 2 * p * p; ++c) sub.set(c, c, 1);
        Lattice inter =
            lattice_intersection(lattice_from_rows(ctx.d_matrix(2).transposed()), lattice_from_rows(sub));
        rep.require("span(D0) == d2(M2) cap (Z[G], Z[G], 0, 0)", lattice_equal(d0lat, inter));
        // the alternative basis, with h1 values
        std::vector<PrismElement> altpre;
        altpre.push_back(ctx.m2(-se.T_(2), 1));
        altpre.push_back(ctx.m2(-se.T_(1), 1));
        for (int i = 1; i <= p - 2; ++i) altpre.push_back(ctx.m2(-(se.t_(1).pow(i) * se.T_(2)), 0));
        for (int j = 1; j <= p - 2; ++j) altpre.push_back(ctx.m2(-(se.T_(1) * se.t_(2).pow(j)), 0));
        GroupRingElement t3t4 = se.t_(3) * se.t_(p + 1);
        for (auto [i, j] : cat.j3p)
            altpre.push_back(ctx.m2(-(GroupRingElement::monomial(p, {0}, i, j) * t3t4), 0));
        std::vector<PrismElement> alt;
        for (const auto& x : altpre) alt.push_back(ctx.apply_d(2, x));
        rep.require("alternative list spans the same lattice",
                    lattice_equal(lattice_from_rows(rows_from(alt, n3)), d0lat));
        rep.require("d2(-t1 T2, 0) == (t1^2 T2, 0, 0, 0)",
                    alt[2] == ctx.m3(se.t_(1).pow(2) * se.T_(2), z, z, z));
        // h1 of the first two preimages generates Z T_G; all others give 0
        int64_t v0 = ctx.apply_h(1, altpre[0]).vec[0];
        int64_t v1 = ctx.apply_h(1, altpre[1]).vec[0];
        rep.require("h1 value on the two T-rows is a generator (+-T_G)",
                    (v0 == 1 || v0 == -1) && v0 == v1,
                    "values " + std::to_string(v0) + ", " + std::to_string(v1));
        rep.note("h1 sign on the T-rows",
                 "computed value is " + std::to_string(v0) + " * T_G for the listed preimages");
        bool zeros = true;
        for (size_t i = 2; i < altpre.size(); ++i)
            if (ctx.apply_h(1, altpre[i]).vec[0] != 0) zeros = false;
        rep.require("h1 == 0 on all remaining rows", zeros);
    }
    return rep;
}

VerificationReport relations_p3(const PrismContext& ctx) {
    VerificationReport rep;
    rep.suite = "M4 relations (p=3)";
    if (ctx.p() != 3) {
        rep.fail("p == 3 required", "context has p = " + std::to_string(ctx.p()));
        return rep;
    }
    const auto& se = ctx.special({0});
    GroupRingElement z(3, CoefficientRing{0});
    GroupRingElement one = GroupRingElement::one(3, {0});
    auto cls = [&](const GroupRingElement& a, const GroupRingElement& b, const GroupRingElement& c,
                   const GroupRingElement& d) { return ctx.m4_class(ctx.m3(a, b, c, d)); };
    PrismElement beta3 = cls(z, z, se.T_(3), z);
    PrismElement beta4 = cls(z, z, z, se.T_(4));

    rep.require("tau1 tau2 beta3 == beta3", ctx.act(1, 1, beta3) == beta3);

    // with X := t1 a1 + t2 a2 (= beta3 + beta4) the translation relations
    // hold; the bare alpha1 + alpha2 version fails in the cokernel
    GroupRingElement w = one - se.tau_(1) * se.tau_(2).pow(2);  // 1 - tau1 tau2^2
    rep.require("(1 - tau1 tau2^2) beta3 == (1 - tau1 tau2^2)(t1 a1 + t2 a2)",
                cls(z, z, w * se.T_(3), z) == cls(w * se.t_(1), w * se.t_(2), z, z));
    rep.require("the bare (1 - tau1 tau2^2)(a1 + a2) variant differs",
                !(cls(z, z, w * se.T_(3), z) == cls(w, w, z, z)));
    rep.note("translation relation generators",
             "the displayed right-hand sides need the factor t1, t2 on alpha1, alpha2; "
             "equivalently the generator is beta3 + beta4");

    GroupRingElement u = one + se.tau_(1) + se.tau_(1) * se.tau_(2);  // 1 + tau1 + tau1 tau2
    rep.require("tau2 beta3 == beta3 - (1 + tau1 + tau1 tau2)(t1 a1 + t2 a2)",
                ctx.act(0, 1, beta3) == cls(-(u * se.t_(1)), -(u * se.t_(2)), se.T_(3), z));
    GroupRingElement u2 = (one + se.tau_(2)) * w;  // iterate the tau2 shift
    rep.require("tau2^2 beta3 == beta3 - (1 + tau2)(1 - tau1 tau2^2)(t1 a1 + t2 a2)",
                ctx.act(0, 2, beta3) == cls(-(u2 * se.t_(1)), -(u2 * se.t_(2)), se.T_(3), z));
    // membership statements the rank count actually relies on
    {
        PrismElement wb = cls(z, z, w * se.T_(3), z);
        std::vector<int64_t> v(wb.vec.begin(), wb.vec.end());
        PrismElement a1c = cls(one, z, z, z), a2c = cls(z, one, z, z);
        Lattice sub = lattice_from_rows(stack({orbit_rows(ctx, a1c), orbit_rows(ctx, a2c)}));
        rep.require("(1 - tau1 tau2^2) beta3 lies in Z[G]a1 + Z[G]a2", lattice_membership(sub, v));
        PrismElement shift = ctx.act(0, 1, beta3);
        for (size_t i = 0; i < shift.vec.size(); ++i) shift.vec[i] -= beta3.vec[i];
        rep.require("tau2 beta3 - beta3 lies in Z[G]a1 + Z[G]a2",
                    lattice_membership(sub, shift.vec));
    }

    rep.require("t1 T2 alpha1 == 0", cls(se.t_(1) * se.T_(2), z, z, z).is_zero());
    rep.require("T1 t2 alpha2 == 0", cls(z, se.T_(1) * se.t_(2), z, z).is_zero());

    PrismElement lhs = beta3;
    for (size_t i = 0; i < lhs.vec.size(); ++i) lhs.vec[i] += beta4.vec[i];
    rep.require("beta3 + beta4 == t1 alpha1 + t2 alpha2", lhs == cls(se.t_(1), se.t_(2), z, z));

    Lattice b3lat = lattice_from_rows(orbit_rows(ctx, beta3));
    Lattice b4lat = lattice_from_rows(orbit_rows(ctx, beta4));
    rep.require("rank Z[G]beta3 == 3 == rank Z[G]beta4", b3lat.rank() == 3 && b4lat.rank() == 3);
    PrismElement a1 = cls(one, z, z, z), a2v = cls(z, one, z, z);
    rep.require("rank Z[G]alpha_i == 7",
                lattice_from_rows(orbit_rows(ctx, a1)).rank() == 7 &&
                    lattice_from_rows(orbit_rows(ctx, a2v)).rank() == 7);
    return rep;
}

}  // namespace prism
