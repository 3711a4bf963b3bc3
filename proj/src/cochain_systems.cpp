#include "prism/cochain_systems.hpp"

#include <cstring>

#include "prism/kernels.hpp"

namespace prism {

namespace {

Cochain char_cochain(const FiniteGroup& g, const Character& c, uint8_t modulus = 3) {
    ScalarFunction f{&g, modulus, c.values()};
    return scalar_cochain(g, f);
}

Cochain lambda2_cochain(const FiniteGroup& g, const Character& c) {
    return scalar_cochain(g, lambda2_theta(c));
}

// s-function fallback: the coherent-lift s when the character lifts, zero
// otherwise (only sound when u00 == 0; callers enforce that)
Cochain s_cochain_or_zero(const FiniteGroup& g, const Character& theta, bool u00_zero) {
    if (theta.has_lift()) return scalar_cochain(g, s_from_lift(theta));
    if (u00_zero) return zero_cochain(g, 1, CoefficientModule::trivial_module(g, 3));
    throw std::invalid_argument(
        "no s-function: character has no Z/9 lift and the system has u00 != 0");
}

// group-ring constant as a mod-m coefficient vector on the monomial basis
std::vector<uint8_t> ring_vec(const GroupRingElement& x, uint8_t m) {
    std::vector<uint8_t> v(x.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = uint8_t(((x.coeff_at(int(i)) % m) + m) % m);
    return v;
}

}  // namespace

std::pair<Character, Character> canonical_pair(const FiniteGroup& g, const std::string& name) {
    int n = g.order();
    std::vector<int> v1(n), v2(n);
    if (name == "c3xc3") {
        for (int a = 0; a < n; ++a) {
            v1[a] = (a / 3) % 3;
            v2[a] = a % 3;
        }
    } else if (name == "c9xc9") {
        for (int a = 0; a < n; ++a) {
            v1[a] = (a / 9) % 3;
            v2[a] = a % 3;
        }
    } else if (name == "c9xc3") {
        for (int a = 0; a < n; ++a) {
            v1[a] = (a / 3) % 3;
            v2[a] = a % 3;
        }
    } else if (name == "c9" || name == "c27") {
        for (int a = 0; a < n; ++a) {
            v1[a] = a % 3;
            v2[a] = (2 * a) % 3;
        }
    } else {
        throw std::invalid_argument("no canonical character pair for " + name);
    }
    return {Character(&g, v1), Character(&g, v2)};
}

USystem::USystem(const FiniteGroup& gr, int deg, Character c1, Character c2)
    : g(&gr),
      n(deg),
      chi1(std::move(c1)),
      chi2(std::move(c2)),
      u00(&gr, deg - 1, CoefficientModule::trivial_module(gr, 3)),
      u10(u00),
      u01(u00),
      u20(u00),
      u11(u00),
      u02(u00),
      u21(u00),
      u12(u00),
      u22(u00),
      y1(u00),
      chi3(u00),
      chi(u00) {}

Cochain USystem::psi_cochain() const {
    Character psi = chi1 + chi2;
    std::vector<int> v = psi.values();
    for (auto& x : v) x = (3 - x) % 3;
    return char_cochain(*g, Character(g, v));
}

VerificationReport USystem::validate() const {
    VerificationReport rep;
    rep.suite = "u-system equations";
    Cochain i = char_cochain(*g, chi1), j = char_cochain(*g, chi2);
    Cochain li = lambda2_cochain(*g, chi1), lj = lambda2_cochain(*g, chi2);
    Cochain psi = psi_cochain();
    Cochain lpsi;
    {
        Character p = chi1 + chi2;
        std::vector<int> v = p.values();
        for (auto& x : v) x = (3 - x) % 3;
        lpsi = lambda2_cochain(*g, Character(g, v));
    }
    auto had = [&](const Cochain& a, const Cochain& b) {
        Cochain out = a;
        for (size_t t = 0; t < out.tuples(); ++t) out.at(t)[0] = uint8_t(a.at(t)[0] * b.at(t)[0] % 3);
        return out;
    };
    Cochain ij = had(i, j);
    Cochain pc = sep_product(psi, chi);
    rep.require("delta(u00) == 0", delta(u00).is_zero());
    rep.require("delta(chi) == 0", delta(chi).is_zero());
    rep.require("delta(chi3) == 0", delta(chi3).is_zero());
    rep.require("delta(u10) == -i u00'", delta(u10) == -sep_product(i, u00));
    rep.require("delta(u01) == -j u00'", delta(u01) == -sep_product(j, u00));
    rep.require("delta(u20) == -(i u10' + lam2_i u00') + psi chi'",
                delta(u20) == -(sep_product(i, u10) + sep_product(li, u00)) + pc);
    rep.require("delta(u02) == -(j u01' + lam2_j u00')",
                delta(u02) == -(sep_product(j, u01) + sep_product(lj, u00)));
    rep.require("delta(u11) == -(j u10' + i u01' + i j u00') + psi chi'",
                delta(u11) ==
                    -(sep_product(j, u10) + sep_product(i, u01) + sep_product(ij, u00)) + pc);
    rep.require(
        "delta(u21) == -(j u20' + i u11' + i j u10' + lam2_i u01' + lam2_i j u00') + (psi - lam2_psi) chi'",
        delta(u21) == -(sep_product(j, u20) + sep_product(i, u11) + sep_product(ij, u10) +
                        sep_product(li, u01) + sep_product(had(li, j), u00)) +
                          pc - sep_product(lpsi, chi));
    rep.require("delta(y1) == psi chi' - i chi3'",
                delta(y1) == pc - sep_product(i, chi3));
    return rep;
}

Cochain USystem::a0() const {
    // delta(u12) = -(i u02' + j u11' + i j u01' + lam2_j u10' + i lam2_j u00')
    //              + lam2_psi chi' + A0
    Cochain i = char_cochain(*g, chi1), j = char_cochain(*g, chi2);
    Cochain lj = lambda2_cochain(*g, chi2);
    auto had = [&](const Cochain& a, const Cochain& b) {
        Cochain out = a;
        for (size_t t = 0; t < out.tuples(); ++t) out.at(t)[0] = uint8_t(a.at(t)[0] * b.at(t)[0] % 3);
        return out;
    };
    Character p = chi1 + chi2;
    std::vector<int> v = p.values();
    for (auto& x : v) x = (3 - x) % 3;
    Cochain lpsi = lambda2_cochain(*g, Character(g, v));
    return delta(u12) +
           (sep_product(i, u02) + sep_product(j, u11) + sep_product(had(i, j), u01) +
            sep_product(lj, u10) + sep_product(had(i, lj), u00)) -
           sep_product(lpsi, chi);
}

Cochain USystem::a1() const {
    // delta(u22) picks up every lower term with weight lam2/linear as in the
    // t1^2 t2^2 coefficient of the expansion, minus the -lam2_psi chi' part
    Cochain i = char_cochain(*g, chi1), j = char_cochain(*g, chi2);
    Cochain li = lambda2_cochain(*g, chi1), lj = lambda2_cochain(*g, chi2);
    auto had = [&](const Cochain& a, const Cochain& b) {
        Cochain out = a;
        for (size_t t = 0; t < out.tuples(); ++t) out.at(t)[0] = uint8_t(a.at(t)[0] * b.at(t)[0] % 3);
        return out;
    };
    Character p = chi1 + chi2;
    std::vector<int> v = p.values();
    for (auto& x : v) x = (3 - x) % 3;
    Cochain lpsi = lambda2_cochain(*g, Character(g, v));
    return delta(u22) +
           (sep_product(li, u02) + sep_product(lj, u20) + sep_product(had(i, j), u11) +
            sep_product(i, u12) + sep_product(j, u21) + sep_product(had(li, j), u01) +
            sep_product(had(i, lj), u10) + sep_product(had(li, lj), u00)) +
           sep_product(lpsi, chi);
}

UVSystem random_valid_uv(const FiniteGroup& g, const Character& chi1, const Character& chi2,
                         int n, std::mt19937& rng) {
    USystem us(g, n, chi1, chi2), vs(g, n, chi2, chi1);
    // unknowns: 9 cochains per side (u00..u21, y1, chi3 minus the free u12,
    // u22) plus the shared chi; kernel of the joint homogeneous system
    const size_t tup = us.u00.tuples();
    std::vector<Cochain*> slots = {&us.u00, &us.u10, &us.u01, &us.u20, &us.u11, &us.u02, &us.u21,
                                   &us.y1,  &us.chi3, &vs.u00, &vs.u10, &vs.u01, &vs.u20, &vs.u11,
                                   &vs.u02, &vs.u21,  &vs.y1,  &vs.chi3, &us.chi};
    const size_t cols = slots.size() * tup;
    auto load = [&](const std::vector<uint8_t>& x) {
        for (size_t s = 0; s < slots.size(); ++s)
            std::memcpy(slots[s]->values().data(), x.data() + s * tup, tup);
        vs.chi = us.chi;
    };
    auto residues = [&]() {
        std::vector<uint8_t> out;
        for (USystem* sys : {&us, &vs}) {
            Cochain i = char_cochain(g, sys->chi1), j = char_cochain(g, sys->chi2);
            Cochain li = lambda2_cochain(g, sys->chi1), lj = lambda2_cochain(g, sys->chi2);
            auto had = [&](const Cochain& a, const Cochain& b) {
                Cochain o = a;
                for (size_t t = 0; t < o.tuples(); ++t)
                    o.at(t)[0] = uint8_t(a.at(t)[0] * b.at(t)[0] % 3);
                return o;
            };
            Character p = sys->chi1 + sys->chi2;
            std::vector<int> pv = p.values();
            for (auto& x : pv) x = (3 - x) % 3;
            Cochain psi = char_cochain(g, Character(&g, pv));
            Cochain lpsi = lambda2_cochain(g, Character(&g, pv));
            Cochain pc = sep_product(psi, sys->chi);
            std::vector<const Cochain*> eqs;
            Cochain e1 = delta(sys->u00);
            Cochain e2 = delta(sys->chi);
            Cochain e3 = delta(sys->chi3);
            Cochain e4 = delta(sys->u10) + sep_product(i, sys->u00);
            Cochain e5 = delta(sys->u01) + sep_product(j, sys->u00);
            Cochain e6 = delta(sys->u20) + sep_product(i, sys->u10) + sep_product(li, sys->u00) - pc;
            Cochain e7 = delta(sys->u02) + sep_product(j, sys->u01) + sep_product(lj, sys->u00);
            Cochain e8 = delta(sys->u11) + sep_product(j, sys->u10) + sep_product(i, sys->u01) +
                         sep_product(had(i, j), sys->u00) - pc;
            Cochain e9 = delta(sys->u21) + sep_product(j, sys->u20) + sep_product(i, sys->u11) +
                         sep_product(had(i, j), sys->u10) + sep_product(li, sys->u01) +
                         sep_product(had(li, j), sys->u00) - pc + sep_product(lpsi, sys->chi);
            Cochain e10 = delta(sys->y1) - pc + sep_product(i, sys->chi3);
            for (const Cochain* e : {&e1, &e2, &e3, &e4, &e5, &e6, &e7, &e8, &e9, &e10})
                out.insert(out.end(), e->values().begin(), e->values().end());
        }
        return out;
    };
    // assemble the constraint matrix by probing unit vectors
    std::vector<std::vector<uint8_t>> colv;
    std::vector<uint8_t> zero_probe(cols, 0);
    load(zero_probe);
    std::vector<uint8_t> base = residues();  // all-zero input: zero residues (homogeneous)
    for (size_t c = 0; c < cols; ++c) {
        std::vector<uint8_t> e(cols, 0);
        e[c] = 1;
        load(e);
        colv.push_back(residues());
    }
    EchelonMod ech(int(cols), 3);
    {
        std::vector<uint8_t> row(cols);
        for (size_t r = 0; r < base.size(); ++r) {
            bool nz = false;
            for (size_t c = 0; c < cols; ++c) {
                row[c] = colv[c][r];
                nz = nz || row[c];
            }
            if (nz) ech.add_row(row);
        }
    }
    auto ker = ech.kernel();
    std::vector<uint8_t> pick(cols, 0);
    for (const auto& k : ker) {
        uint8_t c = uint8_t(rng() % 3);
        if (c) kern::ops().axpy(pick.data(), k.data(), c, cols, 3);
    }
    load(pick);
    // the 8th/9th cochains are free
    for (Cochain* f : {&us.u12, &us.u22, &vs.u12, &vs.u22})
        for (auto& v : f->values()) v = uint8_t(rng() % 3);
    vs.chi = us.chi;
    return {std::move(us), std::move(vs)};
}

Cochain build_D(int k, const USystem& sys) {
    const FiniteGroup& g = *sys.g;
    bool u00_zero = sys.u00.is_zero();
    Cochain i = char_cochain(g, sys.chi1), j = char_cochain(g, sys.chi2);
    Cochain li = lambda2_cochain(g, sys.chi1), lj = lambda2_cochain(g, sys.chi2);
    auto bullet = [&](const std::string& label, bool ok) {
        if (!ok) throw std::invalid_argument("bullet equation failed: " + label);
    };
    switch (k) {
        case 1: {
            bullet("delta(u20 - y1) == -i (u10 - chi3)' - lam2_i u00'",
                   delta(sys.u20 - sys.y1) ==
                       -(sep_product(i, sys.u10 - sys.chi3) + sep_product(li, sys.u00)));
            bullet("delta(u10 - chi3) == -i u00'",
                   delta(sys.u10 - sys.chi3) == -sep_product(i, sys.u00));
            Cochain s = s_cochain_or_zero(g, sys.chi1, u00_zero);
            return sep_product(i, sys.u20 - sys.y1) + sep_product(li, sys.u10 - sys.chi3) +
                   sep_product(s, sys.u00);
        }
        case 2: {
            bullet("delta(u01) == -j u00'", delta(sys.u01) == -sep_product(j, sys.u00));
            bullet("delta(u02) == -(j u01' + lam2_j u00')",
                   delta(sys.u02) == -(sep_product(j, sys.u01) + sep_product(lj, sys.u00)));
            Cochain s = s_cochain_or_zero(g, sys.chi2, u00_zero);
            return sep_product(j, sys.u02) + sep_product(lj, sys.u01) + sep_product(s, sys.u00);
        }
        case 3: {
            Character sum = sys.chi1 + sys.chi2;
            Cochain cs = char_cochain(g, sum), ls = lambda2_cochain(g, sum);
            Cochain m = sys.u20 + sys.u02 + sys.u11;
            Cochain w = sys.u10 + sys.u01 - sys.chi;
            bullet("delta(u20 + u02 + u11) == -(i+j)(u10 + u01 - chi)' - lam2_{i+j} u00'",
                   delta(m) == -(sep_product(cs, w) + sep_product(ls, sys.u00)));
            bullet("delta(u10 + u01 - chi) == -(i+j) u00'", delta(w) == -sep_product(cs, sys.u00));
            Cochain s = s_cochain_or_zero(g, sum, u00_zero);
            return sep_product(cs, m) + sep_product(ls, w) + sep_product(s, sys.u00);
        }
        case 4: {
            Character dif = sys.chi1 - sys.chi2;
            Cochain cd = char_cochain(g, dif), ld = lambda2_cochain(g, dif);
            Cochain m = sys.u01 + sys.u20 + sys.u02 - sys.u11;
            Cochain w = sys.u10 - sys.u01;
            bullet("delta(u01 + u20 + u02 - u11) == -(i-j)(u10 - u01)' - lam2_{i-j} u00'",
                   delta(m) == -(sep_product(cd, w) + sep_product(ld, sys.u00)));
            bullet("delta(u10 - u01) == -(i-j) u00'", delta(w) == -sep_product(cd, sys.u00));
            Cochain s = s_cochain_or_zero(g, dif, u00_zero);
            return sep_product(cd, m) + sep_product(ld, w) + sep_product(s, sys.u00);
        }
        default:
            throw std::invalid_argument("D_k needs k in 1..4");
    }
}

Cochain z_builder(const Cochain& w20, const Cochain& w11, const Cochain& w02, const Cochain& w21,
                  const Cochain& w12, const Character& chi1, const Character& chi2) {
    const FiniteGroup& g = w20.group();
    Cochain i = char_cochain(g, chi1), j = char_cochain(g, chi2);
    Cochain li = lambda2_cochain(g, chi1), lj = lambda2_cochain(g, chi2);
    auto pre = [&](const std::string& label, bool ok) {
        if (!ok) throw std::invalid_argument("z-builder precondition failed: " + label);
    };
    pre("w20, w11, w02 are cocycles",
        delta(w20).is_zero() && delta(w11).is_zero() && delta(w02).is_zero());
    pre("delta(w12) == -i w02' - j w11'",
        delta(w12) == -(sep_product(i, w02) + sep_product(j, w11)));
    pre("delta(w21) == -i w11' - j w20'",
        delta(w21) == -(sep_product(i, w11) + sep_product(j, w20)));
    Cochain ij = i;
    for (size_t t = 0; t < ij.tuples(); ++t) ij.at(t)[0] = uint8_t(i.at(t)[0] * j.at(t)[0] % 3);
    return sep_product(i, w12) + sep_product(li, w02) + sep_product(j, w21) +
           sep_product(lj, w20) + sep_product(ij, w11);
}

Cochain z_packed_u(const Cochain& w20, const Cochain& w11, const Cochain& w02, const Cochain& w21,
                   const Cochain& w12, const PrismContext& ctx, const Character& chi1,
                   const Character& chi2) {
    const FiniteGroup& g = w20.group();
    CoefficientModule zg = CoefficientModule::group_ring(g, 3, chi1, chi2);
    const auto& se = ctx.special({3});
    auto mono = [&](int a, int b) {
        return ring_vec(se.t_(1).pow(a) * se.t_(2).pow(b), 3);
    };
    Cochain u = tensor_ring(w20, zg, mono(2, 0));
    u += tensor_ring(w11, zg, mono(1, 1));
    u += tensor_ring(w02, zg, mono(0, 2));
    u += tensor_ring(w21, zg, mono(2, 1));
    u += tensor_ring(w12, zg, mono(1, 2));
    return u;
}

Cochain alpha_builder(const Cochain& chi, const Cochain& w20, const Cochain& w02,
                      const Cochain& w21, const Cochain& w12, const Character& chi1,
                      const Character& chi2) {
    const FiniteGroup& g = chi.group();
    Cochain i = char_cochain(g, chi1), j = char_cochain(g, chi2);
    auto pre = [&](const std::string& label, bool ok) {
        if (!ok) throw std::invalid_argument("alpha-builder precondition failed: " + label);
    };
    pre("delta(w21) == -i chi' - j w20'",
        delta(w21) == -(sep_product(i, chi) + sep_product(j, w20)));
    pre("delta(w12) == -j chi' - i w02'",
        delta(w12) == -(sep_product(j, chi) + sep_product(i, w02)));
    Cochain alpha = z_builder(w20, chi, w02, w21, w12, chi1, chi2);
    // the second closed form must agree pointwise
    Cochain li = lambda2_cochain(g, chi1), lj = lambda2_cochain(g, chi2);
    Character mpsi = chi1 + chi2;
    std::vector<int> pv = mpsi.values();
    for (auto& x : pv) x = (3 - x) % 3;
    Cochain lpsi = lambda2_cochain(g, Character(&g, pv));
    Cochain second = sep_product(i, w12 - chi) + sep_product(j, w21 - chi) +
                     sep_product(li, w02 - chi) + sep_product(lj, w20 - chi) +
                     sep_product(lpsi, chi);
    if (!(alpha == second))
        throw std::logic_error("the two closed forms of alpha disagree");
    return alpha;
}

std::optional<WSystem> random_valid_w(const FiniteGroup& g, const Character& chi1,
                                      const Character& chi2, int n, std::mt19937& rng,
                                      const Cochain* fixed_w11) {
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    Cochain i = char_cochain(g, chi1), j = char_cochain(g, chi2);
    WSystem w{zero_cochain(g, n - 1, z3), zero_cochain(g, n - 1, z3), zero_cochain(g, n - 1, z3),
              zero_cochain(g, n - 1, z3), zero_cochain(g, n - 1, z3)};
    if (fixed_w11) w.w11 = *fixed_w11;
    // unknowns: the free cochains (w11 only when not prescribed)
    std::vector<Cochain*> slots = {&w.w20, &w.w02, &w.w21, &w.w12};
    if (!fixed_w11) slots.push_back(&w.w11);
    size_t tup = w.w20.tuples();
    size_t cols = slots.size() * tup;
    auto load = [&](const std::vector<uint8_t>& x) {
        for (size_t s = 0; s < slots.size(); ++s)
            std::memcpy(slots[s]->values().data(), x.data() + s * tup, tup);
    };
    auto residues = [&]() {
        std::vector<uint8_t> out;
        Cochain e1 = delta(w.w20);
        Cochain e2 = delta(w.w11);
        Cochain e3 = delta(w.w02);
        Cochain e4 = delta(w.w12) + sep_product(i, w.w02) + sep_product(j, w.w11);
        Cochain e5 = delta(w.w21) + sep_product(i, w.w11) + sep_product(j, w.w20);
        for (const Cochain* e : {&e1, &e2, &e3, &e4, &e5})
            out.insert(out.end(), e->values().begin(), e->values().end());
        return out;
    };
    load(std::vector<uint8_t>(cols, 0));
    std::vector<uint8_t> base = residues();  // inhomogeneous part from a fixed w11
    std::vector<std::vector<uint8_t>> colv;
    for (size_t c = 0; c < cols; ++c) {
        std::vector<uint8_t> e(cols, 0);
        e[c] = 1;
        load(e);
        auto r = residues();
        for (size_t k = 0; k < r.size(); ++k) r[k] = uint8_t((r[k] + 3 - base[k]) % 3);
        colv.push_back(std::move(r));
    }
    EchelonMod ech(int(cols) + 1, 3);
    EchelonMod hech(int(cols), 3);
    {
        std::vector<uint8_t> row(cols + 1);
        for (size_t r = 0; r < base.size(); ++r) {
            for (size_t c = 0; c < cols; ++c) row[c] = colv[c][r];
            row[cols] = uint8_t((3 - base[r]) % 3);
            ech.add_row(row);
            hech.add_row(std::vector<uint8_t>(row.begin(), row.end() - 1));
        }
    }
    auto part = ech.solve_augmented();
    if (!part) return std::nullopt;
    auto ker = hech.kernel();
    std::vector<uint8_t> pick = *part;
    for (const auto& k : ker) {
        uint8_t c = uint8_t(rng() % 3);
        if (c) kern::ops().axpy(pick.data(), k.data(), c, cols, 3);
    }
    load(pick);
    return w;
}

// ---------------------------------------------------------------------------
// M4 representatives and the connecting map

Cochain ring_multiply(const Cochain& f, const GroupRingElement& c) {
    if (f.dim() != 9) throw std::invalid_argument("ring_multiply needs group-ring values");
    uint8_t m = f.modulus();
    // multiplication matrix of c on the monomial basis
    std::vector<uint8_t> mat(81, 0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            GroupRingElement img = c.acted(a, b);  // c * tau1^a tau2^b
            for (int r = 0; r < 9; ++r)
                mat[size_t(r) * 9 + (a * 3 + b)] = uint8_t(((img.coeff_at(r) % m) + m) % m);
        }
    Cochain out = f;
    std::vector<uint8_t> tmp(9);
    for (size_t t = 0; t < f.tuples(); ++t) {
        const uint8_t* v = f.at(t);
        for (int r = 0; r < 9; ++r) {
            int acc = 0;
            for (int cidx = 0; cidx < 9; ++cidx) acc += mat[size_t(r) * 9 + cidx] * v[cidx];
            tmp[r] = uint8_t(acc % m);
        }
        std::memcpy(out.at(t), tmp.data(), 9);
    }
    return out;
}

Cochain tensor_ring(const Cochain& scalar, const CoefficientModule& mod,
                    const std::vector<uint8_t>& value) {
    if (scalar.dim() != 1) throw std::invalid_argument("tensor needs a scalar cochain");
    Cochain out(&scalar.group(), scalar.degree(), mod);
    for (size_t t = 0; t < scalar.tuples(); ++t) {
        uint8_t c = scalar.at(t)[0];
        if (!c) continue;
        uint8_t* dst = out.at(t);
        for (int k = 0; k < mod.dim; ++k) dst[k] = uint8_t(c * value[k] % mod.modulus);
    }
    return out;
}

Cochain assemble_m3_cochain(const PrismContext& ctx, const Cochain& u, const Cochain& v,
                            const Cochain& chi, const CoefficientModule& m3mod) {
    const FiniteGroup& g = u.group();
    Cochain c(&g, u.degree(), m3mod);
    const int d3 = ctx.dim(3);
    for (size_t t = 0; t < c.tuples(); ++t) {
        uint8_t* dst = c.at(t);
        std::memcpy(dst, u.at(t), 9);
        std::memcpy(dst + 9, v.at(t), 9);
        // slot 3 zero; slot 4 = -chi T4 has coset coordinates (-chi, 0, 0)
        dst[d3 - 3] = uint8_t((3 - chi.at(t)[0]) % 3);
    }
    return c;
}

NormalForm normalize_c(const PrismContext& ctx, const Cochain& c, const Character& chi1,
                       const Character& chi2) {
    const FiniteGroup& g = c.group();
    if (c.dim() != ctx.dim(3)) throw std::invalid_argument("normalize_c needs M3/3 values");
    const int n3 = ctx.dim(3);
    const IntMatrix& d2m = ctx.d_matrix(2);
    // precondition: delta(c) is pointwise d2-solvable
    {
        Cochain dc = delta(c);
        std::vector<std::vector<uint8_t>> rows(n3, std::vector<uint8_t>(ctx.dim(2)));
        for (int r = 0; r < n3; ++r)
            for (int cc = 0; cc < ctx.dim(2); ++cc) rows[r][cc] = uint8_t(((d2m(r, cc) % 3) + 3) % 3);
        ModSolver solver(rows, ctx.dim(2), 3);
        for (size_t t = 0; t < dc.tuples(); ++t) {
            std::vector<uint8_t> b(dc.at(t), dc.at(t) + n3);
            if (!solver.solve(b))
                throw std::invalid_argument("input is not an M4 cocycle representative");
        }
    }
    auto subtract_d2 = [&](uint8_t* val, const std::vector<uint8_t>& m2val) {
        for (int r = 0; r < n3; ++r) {
            int acc = 0;
            for (int cc = 0; cc < ctx.dim(2); ++cc)
                acc += int(((d2m(r, cc) % 3) + 3) % 3) * m2val[cc];
            val[r] = uint8_t((val[r] + 3 - acc % 3) % 3);
        }
    };
    Cochain out = c;
    for (size_t t = 0; t < out.tuples(); ++t) {
        uint8_t* val = out.at(t);
        // step 1: kill slot 3 with d2(w3, 0); the cofactor of sum c_k tau1^k T3
        std::vector<uint8_t> m2val(ctx.dim(2), 0);
        for (int k = 0; k < 3; ++k) m2val[k * 3 + 0] = val[2 * 9 + k];
        subtract_d2(val, m2val);
        // step 2: reduce slot 4 to a scalar multiple of T4 with d2(r, 0);
        // on cosets mod <tau4>, tau3 corresponds to tau1^2
        int r1 = val[2 * 9 + 3 + 2], r2 = val[2 * 9 + 3 + 1];
        std::fill(m2val.begin(), m2val.end(), 0);
        m2val[0] = uint8_t(((-(r1 + r2)) % 3 + 3) % 3);
        m2val[1 * 3 + 1] = uint8_t(r1 % 3);  // tau3
        m2val[2 * 3 + 2] = uint8_t(r2 % 3);  // tau3^2
        subtract_d2(val, m2val);
    }
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    CoefficientModule zg = CoefficientModule::group_ring(g, 3, chi1, chi2);
    NormalForm nf{out, Cochain(&g, c.degree(), zg), Cochain(&g, c.degree(), zg),
                  Cochain(&g, c.degree(), z3)};
    for (size_t t = 0; t < out.tuples(); ++t) {
        const uint8_t* val = out.at(t);
        bool slot3_zero = val[2 * 9] == 0 && val[2 * 9 + 1] == 0 && val[2 * 9 + 2] == 0;
        bool slot4_scalar = val[2 * 9 + 3 + 1] == 0 && val[2 * 9 + 3 + 2] == 0;
        if (!slot3_zero || !slot4_scalar)
            throw std::logic_error("normal form reduction left a constrained slot");
        std::memcpy(nf.u.at(t), val, 9);
        std::memcpy(nf.v.at(t), val + 9, 9);
        nf.chi.at(t)[0] = uint8_t((3 - val[2 * 9 + 3]) % 3);
    }
    if (!delta(nf.chi).is_zero()) throw std::logic_error("extracted chi is not a cocycle");
    return nf;
}

EtaResult eta_pipeline(const PrismContext& ctx, const FiniteGroup& g, const Character& chi1,
                       const Character& chi2, const Cochain& u, const Cochain& v,
                       const Cochain& chi) {
    CoefficientModule m3mod = CoefficientModule::prism_module(g, 3, 3, ctx, chi1, chi2);
    CoefficientModule m2mod = CoefficientModule::prism_module(g, 3, 2, ctx, chi1, chi2);
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    const auto& se = ctx.special({3});
    if (!delta(chi).is_zero()) throw std::invalid_argument("chi must be a cocycle");

    EtaResult res;
    res.c = assemble_m3_cochain(ctx, u, v, chi, m3mod);
    Cochain dc = delta(res.c);

    // omega1 = (-(psi t3 + lam2_psi T3) chi', 0)
    Character psum = chi1 + chi2;
    std::vector<int> pv = psum.values();
    for (auto& x : pv) x = (3 - x) % 3;
    Character psi(&g, pv);
    Cochain psic = char_cochain(g, psi);
    Cochain lpsic = scalar_cochain(g, lambda2_theta(psi));
    std::vector<uint8_t> t3vec(ctx.dim(2), 0), T3vec(ctx.dim(2), 0);
    {
        auto t3 = ring_vec(se.t_(3), 3), T3 = ring_vec(se.T_(3), 3);
        std::copy(t3.begin(), t3.end(), t3vec.begin());
        std::copy(T3.begin(), T3.end(), T3vec.begin());
    }
    res.omega1 = tensor_ring(-sep_product(psic, chi), m2mod, t3vec) +
                 tensor_ring(-sep_product(lpsic, chi), m2mod, T3vec);

    // S = delta(c) - d2(omega1), pointwise
    const IntMatrix& d2m = ctx.d_matrix(2);
    Cochain S = dc;
    for (size_t t = 0; t < S.tuples(); ++t) {
        const uint8_t* w1 = res.omega1.at(t);
        uint8_t* val = S.at(t);
        for (int r = 0; r < ctx.dim(3); ++r) {
            int acc = 0;
            for (int cc = 0; cc < ctx.dim(2); ++cc)
                acc += int(((d2m(r, cc) % 3) + 3) % 3) * w1[cc];
            val[r] = uint8_t((val[r] + 3 - acc % 3) % 3);
        }
    }
    // S must take values in (Z3[G] t1 T2, Z3[G] T1 t2, 0, 0); decompose the
    // first slot over {t1 T2, T_G} and the second over {T1 t2, T_G}
    auto t1T2 = ring_vec(se.t_(1) * se.T_(2), 3);
    auto T1t2 = ring_vec(se.T_(1) * se.t_(2), 3);
    auto TG = ring_vec(se.TG, 3);
    std::vector<std::vector<uint8_t>> basis1(9, std::vector<uint8_t>(2)), basis2(9, std::vector<uint8_t>(2));
    for (int r = 0; r < 9; ++r) {
        basis1[r][0] = t1T2[r];
        basis1[r][1] = TG[r];
        basis2[r][0] = T1t2[r];
        basis2[r][1] = TG[r];
    }
    ModSolver solve1(basis1, 2, 3), solve2(basis2, 2, 3);
    res.A0 = zero_cochain(g, S.degree(), z3);
    res.A1 = res.A0;
    res.B0 = res.A0;
    res.B1 = res.A0;
    for (size_t t = 0; t < S.tuples(); ++t) {
        const uint8_t* val = S.at(t);
        for (int r = 2 * 9; r < ctx.dim(3); ++r)
            if (val[r]) throw std::logic_error("residual has support outside the first two slots");
        std::vector<uint8_t> b1(val, val + 9), b2(val + 9, val + 18);
        auto s1 = solve1.solve(b1);
        auto s2 = solve2.solve(b2);
        if (!s1 || !s2) throw std::logic_error("residual not in the stated ideals");
        res.A0.at(t)[0] = (*s1)[0];
        res.A1.at(t)[0] = (*s1)[1];
        res.B0.at(t)[0] = (*s2)[0];
        res.B1.at(t)[0] = (*s2)[1];
    }
    // omega2 = (-(A0 + A1 t1) T2 - (B0 + B1 t2) T1, (A0 + B0) T_G)
    auto T2v = ring_vec(se.T_(2), 3), t1T2v = t1T2, T1v = ring_vec(se.T_(1), 3), T1t2v = T1t2;
    std::vector<uint8_t> T2full(ctx.dim(2), 0), t1T2full(ctx.dim(2), 0), T1full(ctx.dim(2), 0),
        T1t2full(ctx.dim(2), 0), nfull(ctx.dim(2), 0);
    std::copy(T2v.begin(), T2v.end(), T2full.begin());
    std::copy(t1T2v.begin(), t1T2v.end(), t1T2full.begin());
    std::copy(T1v.begin(), T1v.end(), T1full.begin());
    std::copy(T1t2v.begin(), T1t2v.end(), T1t2full.begin());
    nfull[ctx.dim(2) - 1] = 1;
    res.omega2 = tensor_ring(-res.A0, m2mod, T2full) + tensor_ring(-res.A1, m2mod, t1T2full) +
                 tensor_ring(-res.B0, m2mod, T1full) + tensor_ring(-res.B1, m2mod, T1t2full) +
                 tensor_ring(res.A0 + res.B0, m2mod, nfull);
    // d2(omega2) must equal S exactly
    {
        Cochain check = S;
        for (size_t t = 0; t < S.tuples(); ++t) {
            const uint8_t* w2 = res.omega2.at(t);
            uint8_t* val = check.at(t);
            for (int r = 0; r < ctx.dim(3); ++r) {
                int acc = 0;
                for (int cc = 0; cc < ctx.dim(2); ++cc)
                    acc += int(((d2m(r, cc) % 3) + 3) % 3) * w2[cc];
                val[r] = uint8_t((val[r] + 3 - acc % 3) % 3);
            }
        }
        if (!check.is_zero()) throw std::logic_error("omega2 does not reproduce the residual");
    }
    res.eta = res.A0 + res.B0;
    if (!delta(res.eta).is_zero()) throw std::logic_error("A0 + B0 is not a cocycle");
    return res;
}

// ---------------------------------------------------------------------------
// mod-9 lifts

namespace {

// solve the packed lift conditions for one trace case:
// unknowns x0, x1, x2 with u~_k = hat(b_k) + 3 x_k and theta the packing
// character; conditions reduce mod 3 to
//   delta(x0) = -K0, delta(x1) + th x0' = -K1, delta(x2) + th x1' + lam2 x0' = -K2
// where 3 K_k are the mod-9 residuals of the hat lifts.
struct PackedLift {
    bool solved = false;
    Cochain l0, l1, l2;  // the mod-9 lifts
};

PackedLift solve_packed_lift(const FiniteGroup& g, const Character& theta, const Cochain& b0,
                             const Cochain& b1, const Cochain& b2) {
    Cochain th = char_cochain(g, theta);
    Cochain l2c = lambda2_cochain(g, theta);
    Cochain thh = char_cochain(g, theta, 9);
    Cochain l2h = scalar_cochain(g, lambda2_hat(theta));
    Cochain h0 = b0.lifted_hat(), h1 = b1.lifted_hat(), h2 = b2.lifted_hat();
    // residuals: all are divisible by 3 because the mod-3 equations hold
    Cochain r0 = delta(h0);
    Cochain r1 = delta(h1) + sep_product(thh, h0) -
                 (sep_product(th, b2) + sep_product(l2c, b1)).embedded_times3();
    Cochain r2 = delta(h2) + sep_product(thh, h1) + sep_product(l2h, h0) -
                 (sep_product(th, b2) + sep_product(l2c, b2) + sep_product(l2c, b1))
                     .embedded_times3();
    auto third = [](const Cochain& x) {
        Cochain out = x.reduced_mod3();
        for (size_t i = 0; i < x.values().size(); ++i) {
            if (x.values()[i] % 3 != 0) throw std::logic_error("residual not divisible by 3");
            out.values()[i] = uint8_t((x.values()[i] / 3) % 3);
        }
        return out;
    };
    Cochain K0 = third(r0), K1 = third(r1), K2 = third(r2);
    // joint linear solve for (x0, x1, x2)
    const size_t tup = b0.tuples();
    const size_t cols = 3 * tup;
    CoefficientModule z3 = CoefficientModule::trivial_module(g, 3);
    auto comp = [&](const std::vector<uint8_t>& x, int c) {
        Cochain u(&g, b0.degree(), z3);
        std::memcpy(u.values().data(), x.data() + c * tup, tup);
        return u;
    };
    auto apply = [&](const std::vector<uint8_t>& x) {
        Cochain x0 = comp(x, 0), x1 = comp(x, 1), x2 = comp(x, 2);
        Cochain c0 = delta(x0);
        Cochain c1 = delta(x1) + sep_product(th, x0);
        Cochain c2 = delta(x2) + sep_product(th, x1) + sep_product(l2c, x0);
        std::vector<uint8_t> out;
        for (const Cochain* e : {&c0, &c1, &c2})
            out.insert(out.end(), e->values().begin(), e->values().end());
        return out;
    };
    std::vector<uint8_t> rhs;
    for (const Cochain* e : {&K0, &K1, &K2}) {
        for (uint8_t v : e->values()) rhs.push_back(uint8_t((3 - v) % 3));
    }
    std::vector<std::vector<uint8_t>> colv;
    for (size_t c = 0; c < cols; ++c) {
        std::vector<uint8_t> e(cols, 0);
        e[c] = 1;
        colv.push_back(apply(e));
    }
    EchelonMod ech(int(cols) + 1, 3);
    std::vector<uint8_t> row(cols + 1);
    for (size_t r = 0; r < rhs.size(); ++r) {
        bool nz = rhs[r] != 0;
        for (size_t c = 0; c < cols; ++c) {
            row[c] = colv[c][r];
            nz = nz || row[c];
        }
        row[cols] = rhs[r];
        if (nz) ech.add_row(row);
    }
    auto sol = ech.solve_augmented();
    PackedLift out;
    if (!sol) return out;
    out.solved = true;
    auto lift_with = [&](const Cochain& hatv, const std::vector<uint8_t>& x, int c) {
        Cochain l = hatv;
        for (size_t t = 0; t < tup; ++t)
            l.values()[t] = uint8_t((l.values()[t] + 3 * x[c * tup + t]) % 9);
        return l;
    };
    out.l0 = lift_with(h0, *sol, 0);
    out.l1 = lift_with(h1, *sol, 1);
    out.l2 = lift_with(h2, *sol, 2);
    return out;
}

}  // namespace

LiftResult bockstein_lift_side(const USystem& sys, const Cochain& chi_lift, bool swapped) {
    const FiniteGroup& g = *sys.g;
    LiftResult res;
    res.report.suite = swapped ? "mod-9 lift (second slot)" : "mod-9 lift (first slot)";
    // T1-case: (u00, u01, u02) packed along the other variable, theta = chi2
    PackedLift t1 = solve_packed_lift(g, sys.chi2, sys.u00, sys.u01, sys.u02);
    res.t1_solved = t1.solved;
    res.report.require("trace-1 lift system solvable", t1.solved, "no mod-9 lift exists");
    // T3-case: theta = chi1 - chi2, data (u00, u10 - u01, u01 + u20 + u02 - u11)
    PackedLift t3 = solve_packed_lift(g, sys.chi1 - sys.chi2, sys.u00, sys.u10 - sys.u01,
                                      sys.u01 + sys.u20 + sys.u02 - sys.u11);
    res.t3_solved = t3.solved;
    res.report.require("trace-3 lift system solvable", t3.solved, "no mod-9 lift exists");
    // T4-case: theta = chi1 + chi2, data (u00, u10 + u01 - chi, u20 + u02 + u11)
    PackedLift t4 = solve_packed_lift(g, sys.chi1 + sys.chi2, sys.u00,
                                      sys.u10 + sys.u01 - sys.chi, sys.u20 + sys.u02 + sys.u11);
    res.t4_solved = t4.solved;
    res.report.require("trace-4 lift system solvable", t4.solved, "no mod-9 lift exists");
    if (!(t1.solved && t3.solved && t4.solved)) return res;

    // assemble per the fixed recipe; 1/2 = 5 mod 9
    auto se9 = SpecialElements::make(3, {9});
    auto mono = [&](int a, int b) {
        GroupRingElement x = se9.t_(1).pow(swapped ? b : a) * se9.t_(2).pow(swapped ? a : b);
        return ring_vec(x, 9);
    };
    // the character pair of the ambient (i, j) ordering
    const Character& ci = swapped ? sys.chi2 : sys.chi1;
    const Character& cj = swapped ? sys.chi1 : sys.chi2;
    CoefficientModule z9g = CoefficientModule::group_ring(g, 9, ci, cj);
    Cochain mu1 = t3.l1, mu2 = t3.l2, sg2 = t4.l2;
    Cochain u00t = t1.l0, u01t = t1.l1, u02t = t1.l2;
    Cochain u21t = sys.u21.lifted_hat(), u12t = sys.u12.lifted_hat(), u22t = sys.u22.lifted_hat();
    auto five = [](Cochain x) {
        for (auto& v : x.values()) v = uint8_t((5 * v) % 9);
        return x;
    };
    Cochain lift = tensor_ring(u00t, z9g, mono(0, 0));
    lift += tensor_ring(mu1 + u01t, z9g, mono(1, 0));
    lift += tensor_ring(u01t, z9g, mono(0, 1));
    lift += tensor_ring(five(sg2 + mu2 - u01t - (u02t * 2)), z9g, mono(2, 0));
    lift += tensor_ring(five(sg2 - mu2 + u01t), z9g, mono(1, 1));
    lift += tensor_ring(u02t, z9g, mono(0, 2));
    lift += tensor_ring(u21t, z9g, mono(2, 1));
    lift += tensor_ring(u12t, z9g, mono(1, 2));
    lift += tensor_ring(u22t, z9g, mono(2, 2));
    res.lifted = lift;
    (void)chi_lift;
    return res;
}

bool in_3_delta(const Cochain& x, const CoefficientModule& mod3) {
    for (uint8_t v : x.values())
        if (v % 3 != 0) return false;
    Cochain target(&x.group(), x.degree(), mod3);
    for (size_t i = 0; i < x.values().size(); ++i)
        target.values()[i] = uint8_t((x.values()[i] / 3) % 3);
    return is_coboundary(target);
}

BocksteinLift bockstein_lift_builder(const PrismContext& ctx, const UVSystem& sys,
                                     const Cochain& chi_lift) {
    const FiniteGroup& g = *sys.u.g;
    BocksteinLift out{bockstein_lift_side(sys.u, chi_lift, false),
                      bockstein_lift_side(sys.v, chi_lift, true), {}};
    out.report.suite = "mod-9 lift congruence table";
    out.report.merge(out.u_side.report);
    out.report.merge(out.v_side.report);
    if (!out.u_side.t1_solved || !out.u_side.t3_solved || !out.u_side.t4_solved ||
        !out.v_side.t1_solved || !out.v_side.t3_solved || !out.v_side.t4_solved) {
        out.report.note("congruence table skipped", "a lift system was unsolvable on this group");
        return out;
    }
    const Character& ci = sys.u.chi1;
    const Character& cj = sys.u.chi2;
    CoefficientModule z3g = CoefficientModule::group_ring(g, 3, ci, cj);
    auto se9 = SpecialElements::make(3, {9});
    const Cochain& ut = out.u_side.lifted;
    const Cochain& vt = out.v_side.lifted;
    if (!delta(chi_lift).is_zero()) out.report.fail("chi lift is a cocycle", "delta(chi~) != 0");

    out.report.require("delta(u~ T1) == 0", delta(ring_multiply(ut, se9.T_(1))).is_zero());
    out.report.require("delta(v~ T2) == 0", delta(ring_multiply(vt, se9.T_(2))).is_zero());
    out.report.require("delta(u~ T3) == 0 mod 3 delta(C)",
                       in_3_delta(delta(ring_multiply(ut, se9.T_(3))), z3g));
    out.report.require("delta(v~ T3) == 0 mod 3 delta(C)",
                       in_3_delta(delta(ring_multiply(vt, se9.T_(3))), z3g));
    // the common right-hand side (hat(i+j) chi~' t1^2 - 3 lam2_{i+j} chi' (t1 + t1^2)) T4
    Character sum = ci + cj;
    Cochain sumh = char_cochain(g, sum, 9);
    Cochain l2sum3 = lambda2_cochain(g, sum);
    Cochain chi3c = chi_lift.reduced_mod3();
    CoefficientModule z9g = CoefficientModule::group_ring(g, 9, ci, cj);
    Cochain rhs =
        tensor_ring(sep_product(sumh, chi_lift), z9g, ring_vec(se9.t_(1).pow(2) * se9.T_(4), 9)) -
        tensor_ring(sep_product(l2sum3, chi3c).embedded_times3(), z9g,
                    ring_vec((se9.t_(1) + se9.t_(1).pow(2)) * se9.T_(4), 9));
    out.report.require("delta(u~ T4) == rhs mod 3 delta(C)",
                       in_3_delta(delta(ring_multiply(ut, se9.T_(4))) - rhs, z3g));
    out.report.require("delta(v~ T4) == rhs mod 3 delta(C)",
                       in_3_delta(delta(ring_multiply(vt, se9.T_(4))) - rhs, z3g));
    out.report.require(
        "delta(u~ (t1 + t1^2) T4) == 0 mod 3 delta(C)",
        in_3_delta(delta(ring_multiply(ut, (se9.t_(1) + se9.t_(1).pow(2)) * se9.T_(4))), z3g));
    out.report.require(
        "delta(v~ (t2 + t2^2) T4) == 0 mod 3 delta(C)",
        in_3_delta(delta(ring_multiply(vt, (se9.t_(2) + se9.t_(2).pow(2)) * se9.T_(4))), z3g));
    // the exact identity behind the chi-term
    Cochain lhs = ring_multiply(delta(tensor_ring(chi_lift, z9g, ring_vec(se9.T_(4), 9))), se9.t_(1));
    out.report.require("delta(chi~ T4) t1 == rhs exactly", lhs == rhs);
    (void)ctx;
    return out;
}

}  // namespace prism
