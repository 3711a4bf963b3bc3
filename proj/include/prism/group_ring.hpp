#pragma once

// Exact arithmetic in R[G] for G = <tau1,tau2> = (Z/p)^2 and R one of
// Z, Z/p, Z/p^2.  Elements are dense coefficient vectors indexed by
// exponent pairs (i,j) <-> tau1^i tau2^j in row-major order (index p*i+j).
// Z-coefficients are signed int64 with overflow-checked ring operations;
// Z/m coefficients are kept in [0, m).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prism {

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

// modulus 0 means Z; otherwise p or p^2 for the active prime p.
struct CoefficientRing {
    int64_t modulus = 0;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

class GroupRingElement {
  public:
    GroupRingElement() = default;
    GroupRingElement(int p, CoefficientRing ring);

    static GroupRingElement zero(int p, CoefficientRing ring) { return {p, ring}; }
    static GroupRingElement one(int p, CoefficientRing ring);
    // tau1^i tau2^j
    static GroupRingElement monomial(int p, CoefficientRing ring, int i, int j, int64_t c = 1);

    int p() const { return p_; }
    const CoefficientRing& ring() const { return ring_; }
    int size() const { return p_ * p_; }

    int64_t coeff(int i, int j) const { return c_[idx(i, j)]; }
    int64_t coeff_at(int k) const { return c_[k]; }
    void set_coeff(int i, int j, int64_t v);
    const std::vector<int64_t>& coeffs() const { return c_; }

    bool is_zero() const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    GroupRingElement operator-() const;
    GroupRingElement operator*(int64_t s) const;

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    // left translation by tau1^i tau2^j
    GroupRingElement acted(int i, int j) const;

    // sum of coefficients (the augmentation)
    int64_t augmentation() const;

    // reinterpret the same coefficients in another ring (reducing); to Z only from Z.
    GroupRingElement reduced_to(CoefficientRing target) const;
    // lift Z/m -> Z with coefficients in [0, m)
    GroupRingElement lifted_to_z() const;

    // power with nonnegative exponent
    GroupRingElement pow(int e) const;

    std::string to_string() const;  // monomial form c*x1^i*x2^j

  private:
    int idx(int i, int j) const { return i * p_ + j; }
    void reduce();

    int p_ = 0;
    CoefficientRing ring_{};
    std::vector<int64_t> c_;
};

// t_k, T_k for 1 <= k <= p+1, T_G, and the generators.
struct SpecialElements {
    int p;
    CoefficientRing ring;
    std::vector<GroupRingElement> tau;  // tau[k-1] = tau_k, k = 1..p+1
    std::vector<GroupRingElement> t;    // t[k-1] = tau_k - 1
    std::vector<GroupRingElement> T;    // T[k-1] = sum_j tau_k^j
    GroupRingElement TG;

    static SpecialElements make(int p, CoefficientRing ring);

    const GroupRingElement& t_(int k) const { return t.at(k - 1); }
    const GroupRingElement& T_(int k) const { return T.at(k - 1); }
    const GroupRingElement& tau_(int k) const { return tau.at(k - 1); }
};

// JSON text format: signed integer coefficient list of length p^2 in index order.
std::string to_json_array(const GroupRingElement& x);
GroupRingElement from_json_array(int p, CoefficientRing ring, const std::string& json);

}  // namespace prism
