#pragma once

// Finite-group cohomology of the coefficient modules, through the
// inhomogeneous bar complex: H^n spaces with representative bases and
// projections, restriction and the explicit degree-1 coinduction maps,
// Bockstein operators, cup products with degree-1 classes, the Dec
// subgroup, the obstruction spaces X / N3 / N4 / O, and the two
// report-only experiments (h3 after the Bockstein, and the six-term
// sequence) that finite groups need not satisfy.

#include <optional>
#include <random>

#include "prism/cochain.hpp"
#include "prism/cochain_systems.hpp"

namespace prism {

class CohomologySpace {
  public:
    CohomologySpace(const FiniteGroup& g, const CoefficientModule& mod, int degree);

    int dim() const { return int(reps_.size()); }
    int degree() const { return degree_; }
    const CoefficientModule& module() const { return mod_; }
    Cochain representative(int i) const;

    // coordinates of a cocycle's class in the representative basis
    std::vector<uint8_t> project(const Cochain& z) const;
    bool is_zero_class(const Cochain& z) const;
    bool is_cocycle(const Cochain& z) const;

  private:
    const FiniteGroup* g_;
    CoefficientModule mod_;
    int degree_;
    size_t coords_;
    EchelonMod bd_;                            // echelon of the coboundary space
    std::vector<std::vector<uint8_t>> reps_;   // representative cocycles
    std::unique_ptr<ModSolver> rep_solver_;    // residues of reps, for projection
};

CohomologySpace cohomology(const FiniteGroup& g, const CoefficientModule& mod, int n);

// restriction to a subgroup (values at subgroup tuples, module restricted)
Cochain restrict_to(const Cochain& f, const Subgroup& h);
// is the restriction of z a coboundary over the subgroup?
bool restricts_to_coboundary(const Cochain& z, const Subgroup& h);

// degree-1 coinduction: sigma on ker(theta) packs to a Z/3[<tau>]-valued
// cocycle on the whole group, and back
Cochain coinduce_t(const FiniteGroup& g, const Character& theta, const Subgroup& h,
                   const Cochain& sigma, int transversal);
Cochain coinduce_u(const Cochain& packed, const Subgroup& h);
VerificationReport shapiro_maps_report(const FiniteGroup& g, const Character& theta,
                                       uint64_t seed);

// Bockstein of a mod-3 cocycle through the given mod-9 module: lift, take
// the coboundary, divide by 3; the result is checked against an
// alternative lift (the class must not depend on it)
Cochain bockstein(const Cochain& z, const CoefficientModule& mod9, std::mt19937& rng);

// the five coinduced pieces of the sequence modules: subgroup + coordinate
struct ShapiroPiece {
    Subgroup sub;
    int coord;   // coordinate of the identity-coset line inside the module
    int offset;  // slot offset in flat coordinates
    int width;   // slot width
};
std::vector<ShapiroPiece> shapiro_pieces(const FiniteGroup& g, int module_index,
                                         const PrismContext& ctx, const Character& chi1,
                                         const Character& chi2);
// class-vanishing via the slotwise coinduction reductions
bool class_vanishes_by_shapiro(const Cochain& z, const std::vector<ShapiroPiece>& pieces);
// predicted dimension of H^n(G, M_k/3) from the subgroup cohomologies
int shapiro_predicted_dim(const FiniteGroup& g, int module_index, int n,
                          const PrismContext& ctx, const Character& chi1, const Character& chi2);

struct DecSubgroup {
    int n;
    CohomologySpace* space = nullptr;  // not owned
    std::vector<std::vector<uint8_t>> basis;  // coordinates inside H^n
    EchelonMod span;
    DecSubgroup(int deg, int hdim) : n(deg), span(hdim, 3) {}

    bool contains(const std::vector<uint8_t>& coords) const;
    int dim() const { return span.rank(); }
};
DecSubgroup dec_subgroup(CohomologySpace& hn, const CohomologySpace& hn1, const Character& chi1,
                         const Character& chi2);

struct ObstructionSpaces {
    int n;
    std::vector<Cochain> x_basis;          // cocycles spanning X inside H^{n-1}
    std::vector<std::vector<uint8_t>> x_coords;  // their H^{n-1} coordinates
    int dim_x = 0, dim_n3 = 0, dim_n4 = 0, dim_sum = 0, dim_o = 0;
    // bases of the cup-product kernels, as X-coefficient vectors and cocycles
    std::vector<std::vector<uint8_t>> n3_span, n4_span;
    std::vector<Cochain> n3_basis, n4_basis;
};
ObstructionSpaces obstruction_spaces(const FiniteGroup& g, int n, const Character& chi1,
                                     const Character& chi2);

// Lemma-style norm solver: chi in N_k admits (chi + n1 t1 + n2 t1^2) T_k a
// cocycle in the slot ideal; returns the packed solution if one exists
std::optional<Cochain> norm_lift(const PrismContext& ctx, const FiniteGroup& g,
                                 const Character& chi1, const Character& chi2, int k,
                                 const Cochain& chi);

// image of pi4* of an M4-class representative inside O = X / (N3 + N4);
// returns the class coordinates of chi in X mod (N3 + N4), failing when
// the invariant lies outside X
struct OClass {
    bool in_x = false;
    std::vector<uint8_t> x_coords;      // coordinates in the X basis
    bool zero_in_o = false;
};
OClass pi4_bar(const PrismContext& ctx, const ObstructionSpaces& obs,
               const CohomologySpace& hn1, const Cochain& c_m3);

// report-only experiments -----------------------------------------------------

VerificationReport h3_bockstein_report(const PrismContext& ctx, const FiniteGroup& g,
                                       const Character& chi1, const Character& chi2, int n,
                                       uint64_t seed);
VerificationReport six_term_report(const PrismContext& ctx, const FiniteGroup& g,
                                   const Character& chi1, const Character& chi2, int n,
                                   uint64_t seed);

}  // namespace prism
