#pragma once

// Finite test groups standing in for the profinite group acting through
// G = (Z/p)^2: multiplication tables validated at construction, characters
// into Z/3 with optional homomorphic Z/9 lifts, and the scalar cochain zoo
// (hat lifts, lambda^2, the s_theta step function).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prism/report.hpp"

namespace prism {

class FiniteGroup {
  public:
    // table[a * order + b] = index of the product ab; validated
    FiniteGroup(std::vector<int> table, std::vector<std::string> labels = {});

    static FiniteGroup cyclic(int n);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
    // builtin names: c9, c3xc3, c9xc3, c9xc9, c27
    static FiniteGroup builtin(const std::string& name);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[size_t(a) * order_ + b]; }
    int identity() const { return id_; }
    int inverse(int a) const { return inv_[a]; }
    int power(int a, int e) const;
    const std::string& label(int a) const { return labels_[a]; }

    std::string to_json() const;
    static FiniteGroup from_json(const std::string& text);

  private:
    int order_ = 0;
    int id_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

// Subgroup presented as a sorted list of parent element indices, closed
// under the parent multiplication (checked); usable as a FiniteGroup.
struct Subgroup {
    FiniteGroup group;          // intrinsic table
    std::vector<int> elements;  // subgroup index -> parent index
};
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
// kernel of a per-element residue map (values must be a homomorphism image)
Subgroup kernel_subgroup(const FiniteGroup& g, const std::vector<int>& values);

class Character {
  public:
    // values: per-element residues mod 3 forming a homomorphism (checked);
    // the Z/9 lift is populated when one exists
    Character(const FiniteGroup* g, std::vector<int> values);

    const FiniteGroup& group() const { return *g_; }
    int operator()(int a) const { return v_[a]; }
    const std::vector<int>& values() const { return v_; }
    bool is_zero() const;
    bool has_lift() const { return !lift_.empty(); }
    // homomorphism to Z/9 reducing to the character mod 3
    const std::vector<int>& lift() const;

    // sums and differences carry coherent lifts: when both operands have a
    // lift the result's lift is the pointwise combination (the s-functions
    // of i, j, i+j, i-j must come from one compatible family)
    friend Character operator+(const Character& a, const Character& b);
    friend Character operator-(const Character& a, const Character& b);

  private:
    const FiniteGroup* g_;
    std::vector<int> v_;
    std::vector<int> lift_;
};

// character from images of all elements given as a map on generators is
// overkill here; make_character validates an explicit value table
Character make_character(const FiniteGroup& g, const std::vector<int>& values);

struct ScalarFunction {
    const FiniteGroup* g = nullptr;
    int modulus = 3;  // 3 or 9
    std::vector<int> values;

    int operator()(int a) const { return values[a]; }
};

// s_theta(sigma^k h) = floor(k / 3) mod 3, for h in ker(lift) and the
// deterministic generator sigma (smallest element index whose coset
// generates the cyclic order-9 quotient; its lift value is 1, so the
// sigma-exponent of gamma is the lift value).
ScalarFunction s_theta(const Character& theta);
// same values from an arbitrary homomorphic lift, with no requirement that
// the quotient be cyclic of order 9 (used for combined characters whose
// coherent lift may be 3x a character)
ScalarFunction s_from_lift(const Character& theta);
// pointwise hat lift into {0,1,2} viewed mod 9
ScalarFunction hat(const Character& theta);
ScalarFunction hat_of(const ScalarFunction& f);  // same, for mod-3 functions
// lambda^2 composed with theta (mod 3), with hat(theta) (mod 9), with the lift (mod 9)
ScalarFunction lambda2_theta(const Character& theta);
ScalarFunction lambda2_hat(const Character& theta);
ScalarFunction lambda2_lift(const Character& theta);

// binomial(i, 2) mod m conventions
int lambda2_residue(int i, int modulus);

// the decomposition identities tying the zoo together, checked pointwise
VerificationReport verify_scalar_zoo(const FiniteGroup& g, const Character& theta);

}  // namespace prism
