#pragma once

// The four-term sequence of Z[G]-modules
//
//   0 -> M1 --d1--> M2 --d2--> M3 --d3--> M4 -> 0
//
// with M1 = Z[G].T_G, M2 = Z[G] (+) Z.T_G,
// M3 = Z[G] (+) Z[G] (+) Z[G].T_3 (+) Z[G].T_{p+1}, M4 = cok(d2),
// together with the homotopies h1, h2, h3 satisfying h d + d h = p,
// over Z, Z/p and Z/p^2.
//
// Flat coordinates: M1 has 1 (the T_G multiple); M2 has p^2+1 (group ring,
// then the T_G multiple); M3 has 2p^2+2p (two group-ring slots, then the
// slot-3 ideal on the basis tau1^k T_3 and the slot-4 ideal on tau1^k
// T_{p+1}); M4 has p^2+2p canonical coordinates in the image of the A
// catalog basis, so representatives are unique.

#include <cstdint>
#include <memory>
#include <vector>

#include "prism/group_ring.hpp"
#include "prism/int_matrix.hpp"
#include "prism/report.hpp"

namespace prism {

struct BasisCatalog;  // m4_structure.hpp

struct PrismElement {
    int module = 0;  // 1..4
    int p = 0;
    CoefficientRing ring{};
    std::vector<int64_t> vec;

    friend bool operator==(const PrismElement&, const PrismElement&) = default;
    bool is_zero() const;
};

struct KappaPair {
    GroupRingElement k1, k2;  // over Z
};

class PrismContext {
  public:
    explicit PrismContext(int p);
    ~PrismContext();
    PrismContext(PrismContext&&) noexcept;

    int p() const { return p_; }
    const SpecialElements& special(CoefficientRing ring) const;
    const KappaPair& kappa() const { return kappa_; }
    const BasisCatalog& catalog() const { return *catalog_; }

    int dim(int module) const;  // flat coordinate count of M_module

    // --- element constructors -------------------------------------------
    PrismElement m1(int64_t n, CoefficientRing ring = {}) const;
    PrismElement m2(const GroupRingElement& eta, int64_t n) const;
    // slots y3, y4 must lie in their ideals (y3 t3 = 0, y4 t_{p+1} = 0)
    PrismElement m3(const GroupRingElement& x1, const GroupRingElement& x2,
                    const GroupRingElement& y3, const GroupRingElement& y4) const;
    PrismElement m4_from_coords(std::vector<int64_t> coords, CoefficientRing ring) const;
    PrismElement zero(int module, CoefficientRing ring) const;
    PrismElement basis_vector(int module, int index, CoefficientRing ring) const;

    // slot views of an M2/M3 element
    GroupRingElement m2_eta(const PrismElement& x) const;
    int64_t m2_n(const PrismElement& x) const;
    std::vector<GroupRingElement> m3_slots(const PrismElement& x) const;

    // canonical representative in M3 of an M4 coordinate vector
    PrismElement m4_representative(const PrismElement& x) const;
    // canonical M4 coordinates of an M3 element (reduction mod im d2)
    PrismElement m4_class(const PrismElement& x) const;

    // --- the maps ---------------------------------------------------------
    PrismElement apply_d(int k, const PrismElement& x) const;  // d_k: M_k -> M_{k+1}
    PrismElement apply_h(int k, const PrismElement& x) const;  // h_k: M_{k+1} -> M_k

    // group action on flat coordinates (left translation by tau1^i tau2^j)
    PrismElement act(int i, int j, const PrismElement& x) const;

    // matrices of d1, d2, d3 in flat coordinates over Z
    const IntMatrix& d_matrix(int k) const;

    // --- verifiers ---------------------------------------------------------
    VerificationReport verify_exactness(int64_t modulus) const;
    VerificationReport verify_homotopy_prism(int64_t modulus) const;
    VerificationReport verify_h2_congruences() const;
    VerificationReport verify_kappa() const;

  private:
    friend struct BasisCatalog;
    void build_matrices();

    int p_;
    SpecialElements se_z_, se_p_, se_p2_;
    KappaPair kappa_;
    std::unique_ptr<BasisCatalog> catalog_;
    IntMatrix md_[3];   // d1, d2, d3 over Z
    IntMatrix cinv_;    // inverse of the (A then D) change-of-basis matrix
};

// kappa solver: the defining equation
//   t1 k1 + t2 k2 + (p-1)/2 (T_3 + T_{p+1}) = T_G - p
// For p = 3 the fixed explicit pair -(tau1+2 tau1^2), -(tau2+2 tau2^2) is
// returned (the mod-9 congruence suite depends on this choice); for larger
// p the first SNF-based solution is returned.
KappaPair solve_kappa(int p);
// any pair, via the linear system (used to cross-check the fixed p=3 pair)
KappaPair solve_kappa_generic(int p);
bool validate_kappa(int p, const KappaPair& k);

// group-ring identity suites (Z/9[G], p = 3)
VerificationReport verify_facts_4_1();
VerificationReport verify_theorem_4_6_congruences(const KappaPair& kappa);
// the two-variant exact sequence of Lemma 2.1(iv), over Z and mod p
VerificationReport verify_lemma_2_1(int p);

}  // namespace prism
