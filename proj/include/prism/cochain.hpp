#pragma once

// Inhomogeneous cochains C^n(G, V) for a finite group G and finite
// coefficient modules V (trivial Z/3, Z/9; group rings Z/m[(Z/3)^2] and
// Z/m[<tau>] through a character; the four sequence modules mod 3 and 9).
// Values are dense uint8 arrays indexed by tuples; the coboundary and the
// separated product x.y' are the workhorses of every identity here.
//
// Cochains are not normalized (no f(..,1,..) = 0 requirement).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prism/finite_group.hpp"
#include "prism/mod_matrix.hpp"
#include "prism/prism_seq.hpp"
#include "prism/report.hpp"

namespace prism {

// dense arrays stay under this many entries (|G|^n * dim)
inline constexpr size_t kCochainEntryCap = 40'000'000;

struct CoefficientModule {
    std::string name;
    uint8_t modulus = 3;
    int dim = 1;
    const FiniteGroup* g = nullptr;
    bool trivial = true;
    // per group element, a dim x dim matrix (row-major), v -> M v
    std::vector<std::vector<uint8_t>> action;

    static CoefficientModule trivial_module(const FiniteGroup& g, uint8_t modulus);
    // Z/m[G], G = (Z/3)^2, acting through the character pair (chi1, chi2);
    // basis: monomial exponents (i, j) at index 3 i + j
    static CoefficientModule group_ring(const FiniteGroup& g, uint8_t modulus,
                                        const Character& chi1, const Character& chi2);
    // Z/m[<tau>], tau^3 = 1, gamma acting by tau^theta(gamma); basis 1, t, t^2
    // with t = tau - 1 (the packing basis of the degree filtration)
    static CoefficientModule tau_ring_packed(const FiniteGroup& g, uint8_t modulus,
                                             const Character& theta);
    // Z/m[<tau>] on the group basis 1, tau, tau^2
    static CoefficientModule tau_ring(const FiniteGroup& g, uint8_t modulus, const Character& theta);
    // sequence module M_k (x) Z/m in flat coordinates (p = 3)
    static CoefficientModule prism_module(const FiniteGroup& g, uint8_t modulus, int k,
                                          const PrismContext& ctx, const Character& chi1,
                                          const Character& chi2);

    void apply(int gamma, const uint8_t* v, uint8_t* out) const;
    bool action_is_consistent(int samples = 50, uint64_t seed = 7) const;

    // equality is structural (name excluded): same ring, dimension, group, action
    friend bool operator==(const CoefficientModule& a, const CoefficientModule& b) {
        return a.modulus == b.modulus && a.dim == b.dim && a.g == b.g && a.trivial == b.trivial &&
               a.action == b.action;
    }
};

class Cochain {
  public:
    Cochain() = default;
    Cochain(const FiniteGroup* g, int degree, CoefficientModule mod);

    const FiniteGroup& group() const { return *g_; }
    int degree() const { return degree_; }
    const CoefficientModule& module() const { return mod_; }
    uint8_t modulus() const { return mod_.modulus; }
    int dim() const { return mod_.dim; }

    size_t tuples() const { return tuples_; }
    size_t size() const { return vals_.size(); }
    uint8_t* at(size_t t) { return vals_.data() + t * mod_.dim; }
    const uint8_t* at(size_t t) const { return vals_.data() + t * mod_.dim; }
    std::vector<uint8_t>& values() { return vals_; }
    const std::vector<uint8_t>& values() const { return vals_; }

    size_t tuple_index(const std::vector<int>& gs) const;
    std::vector<int> tuple_of(size_t index) const;

    bool is_zero() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    Cochain operator*(uint8_t c) const;
    Cochain operator-() const;
    friend bool operator==(const Cochain&, const Cochain&) = default;

    // componentwise ring views
    Cochain reduced_mod3() const;            // mod-9 values reduced mod 3
    Cochain embedded_times3() const;         // mod-3 cochain as 3f in Z/9
    Cochain lifted_hat() const;              // mod-3 values reinterpreted in {0,1,2} mod 9
    // value-space transport through a per-coordinate linear map
    Cochain mapped(const CoefficientModule& target,
                   const std::function<void(const uint8_t*, uint8_t*)>& f) const;

  private:
    const FiniteGroup* g_ = nullptr;
    int degree_ = 0;
    CoefficientModule mod_;
    size_t tuples_ = 0;
    std::vector<uint8_t> vals_;
};

Cochain zero_cochain(const FiniteGroup& g, int degree, const CoefficientModule& mod);
Cochain scalar_cochain(const FiniteGroup& g, const ScalarFunction& f);  // degree 1
Cochain constant_cochain(const FiniteGroup& g, const CoefficientModule& mod, int degree,
                         const std::vector<uint8_t>& value);

// coboundary (delta f)(g1..g_{n+1}) = g1 f(g2..) + sum (-1)^i f(.., g_i g_{i+1}, ..)
// + (-1)^{n+1} f(g1..gn)
Cochain delta(const Cochain& f);

// separated product: (x . y')(t1, t2) = x(t1) * y(t2), x scalar-valued of
// degree a, y module-valued of degree b; result has degree a + b
Cochain sep_product(const Cochain& x, const Cochain& y);

// stream the rows of the delta matrix C^n -> C^{n+1} into `emit`
// (row-major over the input coordinates); used for kernels and solves
void delta_matrix_stream(const FiniteGroup& g, int degree, const CoefficientModule& mod,
                         const std::function<void(size_t out_coord, const std::vector<uint8_t>& row)>& emit);

// solve delta(y) = target for y of degree (target.degree() - 1); mod 3 only
std::optional<Cochain> solve_delta(const Cochain& target);
// is target a coboundary? (solve and check)
bool is_coboundary(const Cochain& target);

// random representative sampling used by the property suites
Cochain random_cochain(const FiniteGroup& g, int degree, const CoefficientModule& mod,
                       std::mt19937& rng);

// --- identity suites -------------------------------------------------------

// the delta-value identities of the scalar zoo, exhaustively over all pairs
VerificationReport verify_lemma_3_5(const FiniteGroup& g, const Character& theta);
// the 5x5 unitriangular matrix representation r of Z/9 over Z/3
VerificationReport verify_matrix_rep();
// packed-cocycle criteria in Z/3[<tau>] and Z/9[<tau>] plus the mod-9
// correction cocycle; sampled from kernel bases and random valid triples
VerificationReport theorem_3_7_checks(const FiniteGroup& g, const Character& theta, int n,
                                      uint64_t seed);

}  // namespace prism
