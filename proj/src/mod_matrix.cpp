#include "prism/mod_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "prism/kernels.hpp"

namespace prism {

EchelonMod::EchelonMod(int cols, uint8_t m) : cols_(cols), m_(m), row_of_col_(cols, -1) {
    if (m != 2 && m != 3 && m != 5 && m != 7 && m != 11 && m != 13)
        throw std::invalid_argument("EchelonMod needs a small prime modulus");
}

int EchelonMod::reduce(uint8_t* v) const {
    const auto& k = kern::ops();
    size_t c = kern::find_nonzero(v, cols_);
    while (c < size_t(cols_)) {
        int r = row_of_col_[c];
        if (r < 0) return int(c);
        // rows are normalized to leading 1: v -= v[c] * row
        k.axpy(v + c, rows_[r].data() + c, uint8_t(m_ - v[c]), cols_ - c, m_);
        c += kern::find_nonzero(v + c, cols_ - c);
    }
    return cols_;
}

bool EchelonMod::add_row(const uint8_t* v) {
    std::vector<uint8_t> w(v, v + cols_);
    int c = reduce(w.data());
    if (c == cols_) return false;
    kern::ops().scale(w.data() + c, kern::inv_mod(w[c], m_), cols_ - c, m_);
    row_of_col_[c] = int(rows_.size());
    rows_.push_back(std::move(w));
    pivots_.push_back(c);
    return true;
}

bool EchelonMod::add_row(const std::vector<uint8_t>& v) {
    if (int(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    return add_row(v.data());
}

std::vector<uint8_t> EchelonMod::residue(const std::vector<uint8_t>& v) const {
    std::vector<uint8_t> w(v);
    reduce(w.data());
    return w;
}

bool EchelonMod::in_row_space(const std::vector<uint8_t>& v) const {
    std::vector<uint8_t> w(v);
    return reduce(w.data()) == cols_;
}

std::vector<std::vector<uint8_t>> EchelonMod::kernel() const {
    // bring the echelon to reduced form, then read kernel vectors off the
    // free columns directly
    const auto& k = kern::ops();
    std::vector<std::vector<uint8_t>> rr(rows_);
    std::vector<size_t> order(rr.size());
    for (size_t i = 0; i < rr.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] > pivots_[b]; });
    for (size_t oi = 0; oi < order.size(); ++oi) {
        size_t i = order[oi];
        // clear this row's entries at all later pivot columns
        for (size_t oj = 0; oj < oi; ++oj) {
            size_t j = order[oj];
            int p = pivots_[j];
            uint8_t c = rr[i][p];
            if (c) k.axpy(rr[i].data() + p, rr[j].data() + p, uint8_t(m_ - c), cols_ - p, m_);
        }
    }
    std::vector<std::vector<uint8_t>> out;
    for (int f = 0; f < cols_; ++f) {
        if (row_of_col_[f] >= 0) continue;
        std::vector<uint8_t> x(cols_, 0);
        x[f] = 1;
        for (size_t i = 0; i < rr.size(); ++i) {
            uint8_t c = rr[i][f];
            if (c) x[pivots_[i]] = uint8_t(m_ - c);
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<std::vector<uint8_t>> EchelonMod::solve_augmented() const {
    int n = cols_ - 1;
    if (row_of_col_[n] >= 0) return std::nullopt;  // a pivot in the RHS column: 0 = 1
    std::vector<uint8_t> x(n, 0);
    for (int c = n - 1; c >= 0; --c) {
        int r = row_of_col_[c];
        if (r < 0) continue;  // free variable, keep 0
        const auto& row = rows_[r];
        int s = 0;
        for (int j = c + 1; j < n; ++j)
            if (row[j] && x[j]) s += row[j] * x[j];
        // row reads: x[c] + sum row[j] x[j] = row[n]
        x[c] = uint8_t(((row[n] + m_ - s % m_) % m_));
    }
    return x;
}

ModSolver::ModSolver(std::vector<std::vector<uint8_t>> rows, int cols, uint8_t m)
    : cols_(cols), nrows_(int(rows.size())), m_(m), ech_(cols + int(rows.size()), m) {
    std::vector<uint8_t> aug(cols_ + nrows_, 0);
    for (int i = 0; i < nrows_; ++i) {
        if (int(rows[i].size()) != cols_) throw std::invalid_argument("equation length mismatch");
        std::memcpy(aug.data(), rows[i].data(), cols_);
        std::memset(aug.data() + cols_, 0, nrows_);
        aug[cols_ + i] = 1;
        ech_.add_row(aug.data());
    }
}

std::optional<std::vector<uint8_t>> ModSolver::solve(const std::vector<uint8_t>& b) const {
    if (int(b.size()) != nrows_) throw std::invalid_argument("rhs length mismatch");
    // Echelon rows are (E | T) with E = T A.  Solve E x = T b by
    // back-substitution over the pivot columns that lie in the A-part;
    // rows with zero A-part demand (T b)_row = 0.
    std::vector<uint8_t> x(cols_, 0);
    std::vector<int> pivot_row(cols_, -1);
    for (size_t i = 0; i < ech_.rows().size(); ++i) {
        int p = ech_.pivots()[i];
        if (p < cols_) pivot_row[p] = int(i);
    }
    // consistency rows first
    for (size_t i = 0; i < ech_.rows().size(); ++i) {
        if (ech_.pivots()[i] < cols_) continue;
        const auto& row = ech_.rows()[i];
        int s = 0;
        for (int j = 0; j < nrows_; ++j)
            if (row[cols_ + j] && b[j]) s += row[cols_ + j] * b[j];
        if (s % m_ != 0) return std::nullopt;
    }
    for (int c = cols_ - 1; c >= 0; --c) {
        int r = pivot_row[c];
        if (r < 0) continue;
        const auto& row = ech_.rows()[r];
        int rhs = 0;
        for (int j = 0; j < nrows_; ++j)
            if (row[cols_ + j] && b[j]) rhs += row[cols_ + j] * b[j];
        int s = 0;
        for (int j = c + 1; j < cols_; ++j)
            if (row[j] && x[j]) s += row[j] * x[j];
        x[c] = uint8_t(((rhs % m_ + m_) - s % m_) % m_);
    }
    return x;
}

std::vector<std::vector<uint8_t>> ModSolver::kernel() const {
    // kernel of A = kernel of the E-part of the echelon
    EchelonMod e(cols_, m_);
    for (const auto& row : ech_.rows())
        e.add_row(std::vector<uint8_t>(row.begin(), row.begin() + cols_));
    return e.kernel();
}

}  // namespace prism
