#pragma once

// Dense row-echelon accumulator over Z/m for prime m (3 here), built on the
// byte kernels.  Rows are streamed in (the coboundary matrices are far too
// large to materialize), the echelon keeps at most `cols` normalized rows.
// Kernel extraction and single-RHS solves run by back-substitution.
// Non-prime moduli go through IntMatrix's SNF lift instead.

#include <cstdint>
#include <optional>
#include <vector>

namespace prism {

class EchelonMod {
  public:
    EchelonMod(int cols, uint8_t m);

    int cols() const { return cols_; }
    int rank() const { return int(rows_.size()); }
    uint8_t modulus() const { return m_; }

    // Reduce v (length cols) in place against the echelon; returns the
    // leading column of the residue, or cols if it reduced to zero.
    int reduce(uint8_t* v) const;

    // Reduce-and-insert; returns true if the rank grew.
    bool add_row(const uint8_t* v);
    bool add_row(const std::vector<uint8_t>& v);

    // Residue of v after reduction (v unchanged).
    std::vector<uint8_t> residue(const std::vector<uint8_t>& v) const;
    bool in_row_space(const std::vector<uint8_t>& v) const;

    // Basis of {x : E x = 0} where E is the accumulated row space
    // (equals the kernel of the full streamed matrix).
    std::vector<std::vector<uint8_t>> kernel() const;

    // Treat the last column as an attached right-hand side: a solution x
    // (length cols-1) of the streamed system, or nullopt if inconsistent.
    std::optional<std::vector<uint8_t>> solve_augmented() const;

    const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

  private:
    int cols_;
    uint8_t m_;
    std::vector<std::vector<uint8_t>> rows_;  // normalized: leading entry 1
    std::vector<int> pivots_;                 // pivots_[i] = leading column of rows_[i]
    std::vector<int> row_of_col_;             // column -> row index or -1
};

// One-time factorization of a small dense system A x = b (mod prime m) for
// repeated solves against the same A.  `rows` are the equations.
class ModSolver {
  public:
    ModSolver(std::vector<std::vector<uint8_t>> rows, int cols, uint8_t m);

    int cols() const { return cols_; }
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b) const;
    std::vector<std::vector<uint8_t>> kernel() const;
    int rank() const { return ech_.rank(); }

  private:
    int cols_;
    int nrows_;
    uint8_t m_;
    EchelonMod ech_;  // echelon of [A | I]
};

}  // namespace prism
