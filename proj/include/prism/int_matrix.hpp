#pragma once

// Exact linear algebra over Z and Z/m: Smith normal form, Hermite-reduced
// lattices, kernel/image bases, solves, intersections, membership.
//
// Public matrices carry int64 entries with overflow-checked arithmetic;
// the normal-form core runs on arbitrary-precision integers because the
// unimodular transforms U, V of even small random matrices outgrow any
// fixed width.  Kernel bases and solve results are Hermite-reduced before
// they are narrowed back to int64.
//
// Over Z/m with m not prime (m = p^2 here) kernel and solve go through
// the integer lift [A | -m I], which is correct in the presence of zero
// divisors.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prism/group_ring.hpp"

namespace prism {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, int64_t modulus = 0);
    static IntMatrix identity(int n, int64_t modulus = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t modulus() const { return modulus_; }

    int64_t operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    void set(int r, int c, int64_t v);

    std::vector<int64_t> row(int r) const;
    void set_row(int r, const std::vector<int64_t>& v);

    IntMatrix transposed() const;
    IntMatrix with_modulus(int64_t m) const;  // reduce entries into Z/m (or lift to Z if m=0)

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    // A*x for a column vector x
    std::vector<int64_t> apply(const std::vector<int64_t>& x) const;
    // x^T*A for a row vector x
    std::vector<int64_t> apply_left(const std::vector<int64_t>& x) const;

    std::string to_json() const;
    static IntMatrix from_json(const std::string& text);

  private:
    int rows_ = 0, cols_ = 0;
    int64_t modulus_ = 0;
    std::vector<int64_t> e_;
};

// Arbitrary-precision matrix used by the normal-form core.
class BigMatrix {
  public:
    BigMatrix() = default;
    BigMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    explicit BigMatrix(const IntMatrix& m);
    static BigMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const BigInt& operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    BigInt& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }

    friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);
    friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

    // narrows; throws OverflowError if an entry does not fit
    IntMatrix to_int_matrix(int64_t modulus = 0) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> e_;
};

BigInt det(const BigMatrix& a);  // Bareiss, exact

struct SnfResult {
    BigMatrix U, D, V;  // U*A*V = D, U and V unimodular
    int rank = 0;
    std::vector<BigInt> divisors;  // nonzero diagonal, d_i | d_{i+1}
    // det(U), det(V) in {+1,-1}, tracked through the elementary operations
    int det_u = 1, det_v = 1;
};

// modulus must be 0.
SnfResult smith_normal_form(const IntMatrix& a);

int64_t det64(const IntMatrix& a);  // Bareiss with overflow checks (small matrices)

// Lattice in Z^n: rows of `basis` are independent and Hermite-reduced
// (row style, positive pivots, entries above a pivot reduced mod it).
struct Lattice {
    int ambient = 0;
    IntMatrix basis;  // basis.rows() = rank

    int rank() const { return basis.rows(); }
};

// Hermite-reduce a spanning set (rows may be dependent).
Lattice lattice_from_rows(const IntMatrix& rows);

// Basis of the integer kernel lattice {x : A x = 0} (modulus 0), or a
// generating set of the kernel module over Z/m (modulus != 0).
// Rows of the result are the kernel vectors, Hermite-reduced over Z.
IntMatrix kernel_basis(const IntMatrix& a);

// Same kernel, arbitrary-precision rows: the Hermite-reduced basis of a
// random near-square matrix has minor-sized entries, beyond int64.
BigMatrix kernel_basis_exact(const IntMatrix& a);

// Some x with A x = b in the ambient ring, or nullopt.  Over Z the
// solution is size-reduced against the kernel lattice.
std::optional<std::vector<int64_t>> solve(const IntMatrix& a, const std::vector<int64_t>& b);

Lattice lattice_intersection(const Lattice& l1, const Lattice& l2);

// v integer combination of basis rows (Z), or Z/m combination (m != 0).
bool lattice_membership(const Lattice& l, const std::vector<int64_t>& v);

// The Z/m-span of the rows of `gens`, as the integer lattice generated by
// them together with m Z^n (membership mod m = lattice membership here).
Lattice lattice_mod_span(const IntMatrix& gens, int64_t m);

// Two-sided membership + rank equality; never compares basis vectors.
bool lattice_equal(const Lattice& l1, const Lattice& l2);

// Span comparison over Z/m: every row of `a` solvable from rows of `b` and
// vice versa (rows are generators of submodules of (Z/m)^n).
bool span_equal_mod(const IntMatrix& a, const IntMatrix& b);
bool span_contains_mod(const IntMatrix& big, const IntMatrix& small);

}  // namespace prism
