#pragma once

// The structured cochain systems of the mod-3 calculus: the nine-equation
// u-system attached to a class of M4 (x) Z/3, the derived cocycles D1..D4,
// the z and alpha builders, the normal form (u, v, 0, -chi T4) of an
// M4-valued cochain, the connecting-map pipeline producing [A0 + B0], and
// the mod-9 lift machinery behind the Bockstein computation.

#include <optional>
#include <random>

#include "prism/cochain.hpp"

namespace prism {

// the canonical character pair of a builtin group (the map onto (Z/3)^2
// where one exists; dependent pairs otherwise)
std::pair<Character, Character> canonical_pair(const FiniteGroup& g, const std::string& name);

struct USystem {
    const FiniteGroup* g = nullptr;
    int n = 2;  // the member cochains live in degree n-1
    Character chi1, chi2;  // the scalars i and j of this side
    // scalar cochains of degree n-1 (mod 3)
    Cochain u00, u10, u01, u20, u11, u02, u21, u12, u22;
    Cochain y1, chi3;  // auxiliary: delta(y1) = psi chi' - i chi3'
    Cochain chi;       // the shared slot-4 invariant (cocycle)

    USystem(const FiniteGroup& g, int n, Character c1, Character c2);

    Cochain psi_cochain() const;  // psi = -(i + j) as a degree-1 scalar
    // the seven defining equations plus the auxiliary/cocycle conditions;
    // every item is labelled by its equation
    VerificationReport validate() const;
    // the free 8th/9th right-hand sides: A0 and A1 determined by u12, u22
    Cochain a0() const;
    Cochain a1() const;
};

// a u-side and a v-side sharing chi (the v side stores v_{m l} at (l, m)
// with the two characters swapped, so the same code paths apply)
struct UVSystem {
    USystem u, v;
};

UVSystem random_valid_uv(const FiniteGroup& g, const Character& chi1, const Character& chi2,
                         int n, std::mt19937& rng);

// D_k from the bullet equations; s-functions come from character lifts
// (zero character or forced-zero u00 fall back to s = 0)
Cochain build_D(int k, const USystem& sys);

// z = i w12' + lam2_i w02' + j w21' + lam2_j w20' + i j w11'
// preconditions: w20, w11, w02 cocycles, delta(w12) = -i w02' - j w11',
// delta(w21) = -i w11' - j w20'
Cochain z_builder(const Cochain& w20, const Cochain& w11, const Cochain& w02, const Cochain& w21,
                  const Cochain& w12, const Character& chi1, const Character& chi2);
// packed form of the same data; delta of it equals z (x) T_G
Cochain z_packed_u(const Cochain& w20, const Cochain& w11, const Cochain& w02, const Cochain& w21,
                   const Cochain& w12, const PrismContext& ctx, const Character& chi1,
                   const Character& chi2);
// alpha is z with w11 = chi; both closed forms are produced and compared
Cochain alpha_builder(const Cochain& chi, const Cochain& w20, const Cochain& w02,
                      const Cochain& w21, const Cochain& w12, const Character& chi1,
                      const Character& chi2);

// random solutions of the z/alpha preconditions
struct WSystem {
    Cochain w20, w11, w02, w21, w12;
};
std::optional<WSystem> random_valid_w(const FiniteGroup& g, const Character& chi1,
                                      const Character& chi2, int n, std::mt19937& rng,
                                      const Cochain* fixed_w11 = nullptr);

// --- M4 representatives and the connecting map ------------------------------

// build the M3/3-valued cochain (u, v, 0, -chi T4) from group-ring-valued
// u, v and the scalar chi
Cochain assemble_m3_cochain(const PrismContext& ctx, const Cochain& u, const Cochain& v,
                            const Cochain& chi, const CoefficientModule& m3mod);

struct NormalForm {
    Cochain c;        // (u, v, 0, -chi T4)
    Cochain u, v;     // group-ring components
    Cochain chi;      // scalar cocycle
};

// adjust an M3/3-valued representative into the (u, v, 0, -chi T4) form by
// subtracting d2-images; requires delta(c) to be pointwise d2-solvable
NormalForm normalize_c(const PrismContext& ctx, const Cochain& c, const Character& chi1,
                       const Character& chi2);

struct EtaResult {
    Cochain c;                 // the representative
    Cochain omega1, omega2;    // M2/3-valued corrections with d2(w1 + w2) = delta(c)
    Cochain A0, A1, B0, B1;    // scalar extraction from delta(c) - d2(omega1)
    Cochain eta;               // A0 + B0, a cocycle
};

EtaResult eta_pipeline(const PrismContext& ctx, const FiniteGroup& g, const Character& chi1,
                       const Character& chi2, const Cochain& u, const Cochain& v,
                       const Cochain& chi);

// --- mod-9 lifts -------------------------------------------------------------

struct LiftResult {
    bool t1_solved = false, t3_solved = false, t4_solved = false;
    Cochain lifted;  // the assembled Z/9[G]-valued lift (valid when all solved)
    VerificationReport report;
};

// attempt the three packed lift systems for one side and assemble the
// mod-9 lift; chi_lift is a mod-9 cocycle lifting sys.chi
LiftResult bockstein_lift_side(const USystem& sys, const Cochain& chi_lift, bool swapped);

// both sides plus the congruence table (everything mod 3 delta(C(Z/9[G])))
struct BocksteinLift {
    LiftResult u_side, v_side;
    VerificationReport report;
};
BocksteinLift bockstein_lift_builder(const PrismContext& ctx, const UVSystem& sys,
                                     const Cochain& chi_lift);

// helpers shared with the cohomology layer
Cochain ring_multiply(const Cochain& f, const GroupRingElement& c);   // valuewise f * c
Cochain tensor_ring(const Cochain& scalar, const CoefficientModule& mod,
                    const std::vector<uint8_t>& value);               // scalar (x) fixed vector
// x == 3*y with y a coboundary of Z/3[G]-valued cochains?
bool in_3_delta(const Cochain& x, const CoefficientModule& mod3);

}  // namespace prism
