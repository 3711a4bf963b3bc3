#include "prism/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <json.hpp>

namespace prism {

namespace {

int64_t canon(int64_t v, int64_t m) {
    if (m == 0) return v;
    v %= m;
    return v < 0 ? v + m : v;
}

int64_t narrow(const BigInt& v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError{};
    return int64_t(v);
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols, int64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), e_(size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0 || modulus < 0) throw std::invalid_argument("bad matrix shape");
}

IntMatrix IntMatrix::identity(int n, int64_t modulus) {
    IntMatrix m(n, n, modulus);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void IntMatrix::set(int r, int c, int64_t v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    e_[size_t(r) * cols_ + c] = canon(v, modulus_);
}

std::vector<int64_t> IntMatrix::row(int r) const {
    return {e_.begin() + size_t(r) * cols_, e_.begin() + size_t(r + 1) * cols_};
}

void IntMatrix::set_row(int r, const std::vector<int64_t>& v) {
    if (int(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols_; ++c) set(r, c, v[c]);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_, modulus_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
}

IntMatrix IntMatrix::with_modulus(int64_t m) const {
    IntMatrix t(rows_, cols_, m);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(r, c, (*this)(r, c));
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_ || a.modulus_ != b.modulus_) throw std::invalid_argument("matmul shape/ring");
    IntMatrix r(a.rows_, b.cols_, a.modulus_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            int64_t av = a(i, k);
            if (av == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b(k, j) == 0) continue;
                r.set(i, j, checked_add(r(i, j), checked_mul(av, b(k, j))));
            }
        }
    return r;
}

std::vector<int64_t> IntMatrix::apply(const std::vector<int64_t>& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<int64_t> r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        int64_t s = 0;
        for (int j = 0; j < cols_; ++j) s = checked_add(s, checked_mul((*this)(i, j), x[j]));
        r[i] = canon(s, modulus_);
    }
    return r;
}

std::vector<int64_t> IntMatrix::apply_left(const std::vector<int64_t>& x) const {
    if (int(x.size()) != rows_) throw std::invalid_argument("vector length mismatch");
    std::vector<int64_t> r(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < cols_; ++j)
            r[j] = checked_add(r[j], checked_mul(x[i], (*this)(i, j)));
    }
    for (auto& v : r) v = canon(v, modulus_);
    return r;
}

std::string IntMatrix::to_json() const {
    nlohmann::json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    j["modulus"] = modulus_;
    j["entries"] = e_;
    return j.dump();
}

IntMatrix IntMatrix::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("modulus").get<int64_t>());
    auto entries = j.at("entries").get<std::vector<int64_t>>();
    if (entries.size() != size_t(m.rows()) * m.cols()) throw std::invalid_argument("entry count mismatch");
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, entries[size_t(r) * m.cols() + c]);
    return m;
}

BigMatrix::BigMatrix(const IntMatrix& m) : BigMatrix(m.rows(), m.cols()) {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) at(r, c) = m(r, c);
}

BigMatrix BigMatrix::identity(int n) {
    BigMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape");
    BigMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const BigInt& av = a(i, k);
            if (av == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) r.at(i, j) += av * b(k, j);
        }
    return r;
}

IntMatrix BigMatrix::to_int_matrix(int64_t modulus) const {
    IntMatrix m(rows_, cols_, modulus);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const BigInt& v = (*this)(r, c);
            m.set(r, c, modulus ? int64_t(((v % modulus) + modulus) % modulus) : narrow(v));
        }
    return m;
}

BigInt det(const BigMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
    int n = a.rows();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[r][c] = a(r, c);
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pr = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) return 0;
            std::swap(m[k], m[pr]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact by Bareiss
        prev = m[k][k];
    }
    return n == 0 ? BigInt(1) : BigInt(sign) * m[n - 1][n - 1];
}

int64_t det64(const IntMatrix& a) { return narrow(det(BigMatrix(a))); }

// ---------------------------------------------------------------------------
// Smith normal form.  Pivot rule: smallest absolute value over the trailing
// block, tie-broken by lowest row then column, re-picked after every
// clearing pass; row/column operations mirrored into U and V, with their
// determinants tracked through the elementary operations.

namespace {

struct SnfWork {
    std::vector<std::vector<BigInt>> a, u, v;
    int rows, cols;
    int det_u = 1, det_v = 1;

    void row_sub(int r1, int r2, const BigInt& q) {  // row r1 -= q * row r2
        for (int c = 0; c < cols; ++c) a[r1][c] -= q * a[r2][c];
        for (size_t c = 0; c < u[r1].size(); ++c) u[r1][c] -= q * u[r2][c];
    }
    void col_sub(int c1, int c2, const BigInt& q) {
        for (int r = 0; r < rows; ++r) a[r][c1] -= q * a[r][c2];
        for (size_t r = 0; r < v.size(); ++r) v[r][c1] -= q * v[r][c2];
    }
    void row_swap(int r1, int r2) {
        if (r1 == r2) return;
        std::swap(a[r1], a[r2]);
        std::swap(u[r1], u[r2]);
        det_u = -det_u;
    }
    void col_swap(int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < rows; ++r) std::swap(a[r][c1], a[r][c2]);
        for (size_t r = 0; r < v.size(); ++r) std::swap(v[r][c1], v[r][c2]);
        det_v = -det_v;
    }
    void row_negate(int r) {
        for (int c = 0; c < cols; ++c) a[r][c] = -a[r][c];
        for (size_t c = 0; c < u[r].size(); ++c) u[r][c] = -u[r][c];
        det_u = -det_u;
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& in) {
    if (in.modulus() != 0) throw std::invalid_argument("SNF requires modulus 0");
    const int rows = in.rows(), cols = in.cols();
    SnfWork w;
    w.rows = rows;
    w.cols = cols;
    w.a.assign(rows, std::vector<BigInt>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) w.a[r][c] = in(r, c);
    w.u.assign(rows, std::vector<BigInt>(rows));
    w.v.assign(cols, std::vector<BigInt>(cols));
    for (int r = 0; r < rows; ++r) w.u[r][r] = 1;
    for (int c = 0; c < cols; ++c) w.v[c][c] = 1;

    const int n = std::min(rows, cols);
    int rank = n;
    for (int k = 0; k < n; ++k) {
        bool have_pivot = true;
        for (;;) {
            int pr = -1, pc = -1;
            BigInt best = 0;
            for (int r = k; r < rows; ++r)
                for (int c = k; c < cols; ++c) {
                    BigInt v = abs(w.a[r][c]);
                    if (v != 0 && (pr < 0 || v < best)) {
                        best = v;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) {
                have_pivot = false;
                break;  // trailing block all zero
            }
            w.row_swap(k, pr);
            w.col_swap(k, pc);
            bool clean = true;
            for (int r = k + 1; r < rows; ++r) {
                if (w.a[r][k] == 0) continue;
                BigInt q = w.a[r][k] / w.a[k][k];
                if (q != 0) w.row_sub(r, k, q);
                if (w.a[r][k] != 0) clean = false;  // remainder; re-pick pivot
            }
            for (int c = k + 1; c < cols; ++c) {
                if (w.a[k][c] == 0) continue;
                BigInt q = w.a[k][c] / w.a[k][k];
                if (q != 0) w.col_sub(c, k, q);
                if (w.a[k][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) {
            rank = k;
            break;
        }
        if (w.a[k][k] < 0) w.row_negate(k);
    }

    // Divisibility chain: replace a violating diag(a,b) by diag(gcd, lcm)
    // via the explicit 2x2 unimodular pair
    //   R = [[x, y], [-b/g, a/g]],  C = [[1, -y*b/g], [1, x*a/g]]
    // with x*a + y*b = g; R*diag(a,b)*C = diag(g, a*b/g), det R = det C = 1.
    auto egcd = [](BigInt a, BigInt b, BigInt& x, BigInt& y) {
        BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            BigInt q = a / b;
            BigInt t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
            t = y0 - q * y1;
            y0 = y1;
            y1 = t;
        }
        x = x0;
        y = y0;
        return a;
    };
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            BigInt a = w.a[i][i], b = w.a[j][j];
            if (b % a == 0) continue;
            BigInt x, y;
            BigInt g = egcd(a, b, x, y);
            BigInt ag = a / g, bg = b / g;
            auto comb_rows = [&](std::vector<std::vector<BigInt>>& mat) {
                for (size_t c = 0; c < mat[i].size(); ++c) {
                    BigInt vi = mat[i][c], vj = mat[j][c];
                    mat[i][c] = x * vi + y * vj;
                    mat[j][c] = ag * vj - bg * vi;
                }
            };
            comb_rows(w.a);
            comb_rows(w.u);
            BigInt ybg = y * bg, xag = x * ag;
            for (int r = 0; r < rows; ++r) {
                BigInt vi = w.a[r][i], vj = w.a[r][j];
                w.a[r][i] = vi + vj;
                w.a[r][j] = xag * vj - ybg * vi;
            }
            for (size_t r = 0; r < w.v.size(); ++r) {
                BigInt vi = w.v[r][i], vj = w.v[r][j];
                w.v[r][i] = vi + vj;
                w.v[r][j] = xag * vj - ybg * vi;
            }
        }

    SnfResult res;
    res.rank = rank;
    res.det_u = w.det_u;
    res.det_v = w.det_v;
    res.U = BigMatrix(rows, rows);
    res.V = BigMatrix(cols, cols);
    res.D = BigMatrix(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < rows; ++c) res.U.at(r, c) = w.u[r][c];
    for (int r = 0; r < cols; ++r)
        for (int c = 0; c < cols; ++c) res.V.at(r, c) = w.v[r][c];
    for (int i = 0; i < rank; ++i) {
        res.D.at(i, i) = w.a[i][i];
        res.divisors.push_back(w.a[i][i]);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Hermite form, kernels, solves (BigInt internals, narrowed outputs).

namespace {

int leading_col(const std::vector<BigInt>& v) {
    for (size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) return int(c);
    return int(v.size());
}

// Row-style HNF; returns independent rows sorted by pivot column,
// positive pivots, entries above a pivot reduced into [0, pivot).
// Columns are cleared left to right with the smallest-magnitude entry as
// pivot and nearest-integer quotients; pairwise Euclid chains on these
// rows blow entry sizes up catastrophically, this scheme does not.
std::vector<std::vector<BigInt>> hnf_rows(std::vector<std::vector<BigInt>> pool, int cols) {
    std::vector<std::vector<BigInt>> basis;
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](const auto& r) { return leading_col(r) == int(r.size()); }),
               pool.end());
    for (int c = 0; c < cols && !pool.empty(); ++c) {
        for (;;) {
            // rows with support at column c (all have leading col >= c)
            int pivot = -1;
            BigInt best = 0;
            for (size_t i = 0; i < pool.size(); ++i) {
                if (pool[i][c] == 0) continue;
                BigInt v = abs(pool[i][c]);
                if (pivot < 0 || v < best) {
                    best = v;
                    pivot = int(i);
                }
            }
            if (pivot < 0) break;  // column done, no pivot here
            auto& pr = pool[pivot];
            bool clean = true;
            for (size_t i = 0; i < pool.size(); ++i) {
                if (int(i) == pivot || pool[i][c] == 0) continue;
                // nearest-integer quotient keeps |remainder| <= |pivot| / 2
                const BigInt& a = pool[i][c];
                const BigInt& b = pr[c];
                BigInt q = a / b;
                BigInt rem = a - q * b;
                if (2 * abs(rem) > abs(b)) q += (rem > 0) == (b > 0) ? 1 : -1;
                if (q != 0)
                    for (int k = c; k < cols; ++k) pool[i][k] -= q * pr[k];
                if (pool[i][c] != 0) clean = false;
            }
            if (clean) {
                basis.push_back(std::move(pr));
                pool.erase(pool.begin() + pivot);
                pool.erase(std::remove_if(pool.begin(), pool.end(),
                                          [&](const auto& r) { return leading_col(r) == int(r.size()); }),
                           pool.end());
                break;
            }
        }
    }
    for (auto& b : basis)
        if (b[leading_col(b)] < 0)
            for (auto& v : b) v = -v;
    // left pivots first, so later reductions cannot disturb finished columns
    for (size_t i = 0; i < basis.size(); ++i) {
        int pc = leading_col(basis[i]);
        for (size_t j = 0; j < i; ++j) {
            BigInt v = basis[j][pc];
            BigInt q = v / basis[i][pc];
            if (v % basis[i][pc] < 0) q -= 1;  // floor
            if (q != 0)
                for (int c = 0; c < cols; ++c) basis[j][c] -= q * basis[i][c];
        }
    }
    return basis;
}

IntMatrix narrow_rows(const std::vector<std::vector<BigInt>>& rows, int cols, int64_t modulus = 0) {
    IntMatrix m(int(rows.size()), cols, modulus);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) {
            const BigInt& v = rows[r][c];
            m.set(int(r), c, modulus ? int64_t(((v % modulus) + modulus) % modulus) : narrow(v));
        }
    return m;
}

// Kernel of an integer matrix as HNF-reduced BigInt rows.
std::vector<std::vector<BigInt>> kernel_big(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    int n = a.cols();
    std::vector<std::vector<BigInt>> rows;
    for (int i = s.rank; i < n; ++i) {
        std::vector<BigInt> r(n);
        for (int j = 0; j < n; ++j) r[j] = s.V(j, i);
        rows.push_back(std::move(r));
    }
    return hnf_rows(std::move(rows), n);
}

// reduce v against HNF rows with floor division (size control)
void hnf_reduce_vector(std::vector<BigInt>& v, const std::vector<std::vector<BigInt>>& basis) {
    for (const auto& b : basis) {
        int pc = leading_col(b);
        BigInt q = v[pc] / b[pc];
        if (v[pc] % b[pc] < 0) q -= 1;
        if (q != 0)
            for (size_t c = 0; c < v.size(); ++c) v[c] -= q * b[c];
    }
}

}  // namespace

BigMatrix kernel_basis_exact(const IntMatrix& a) {
    if (a.modulus() != 0) throw std::invalid_argument("exact kernel requires modulus 0");
    auto rows = kernel_big(a);
    BigMatrix m(int(rows.size()), a.cols());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < a.cols(); ++c) m.at(int(r), c) = rows[r][c];
    return m;
}

Lattice lattice_from_rows(const IntMatrix& rows) {
    if (rows.modulus() != 0) throw std::invalid_argument("lattices live over Z");
    std::vector<std::vector<BigInt>> rr;
    rr.reserve(rows.rows());
    for (int r = 0; r < rows.rows(); ++r) {
        std::vector<BigInt> row(rows.cols());
        for (int c = 0; c < rows.cols(); ++c) row[c] = rows(r, c);
        rr.push_back(std::move(row));
    }
    auto basis = hnf_rows(std::move(rr), rows.cols());
    Lattice l;
    l.ambient = rows.cols();
    l.basis = narrow_rows(basis, rows.cols());
    return l;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    if (a.modulus() == 0) return narrow_rows(kernel_big(a), a.cols());
    // Z/m via the SNF of the integer lift: with U A V = D, the congruence
    // A x = 0 (mod m) becomes d_i z_i = 0 (mod m) for z = V^{-1} x, so the
    // kernel is generated by (m / gcd(d_i, m)) V e_i and the free columns.
    int64_t m = a.modulus();
    SnfResult s = smith_normal_form(a.with_modulus(0));
    std::vector<std::vector<int64_t>> gens;
    for (int i = 0; i < a.cols(); ++i) {
        int64_t mult = 1;
        if (i < s.rank) {
            BigInt g = gcd(s.divisors[i], BigInt(m));
            mult = m / int64_t(g);
            if (mult % m == 0) continue;  // unit divisor: no kernel contribution
        }
        std::vector<int64_t> x(a.cols());
        bool nz = false;
        for (int r = 0; r < a.cols(); ++r) {
            BigInt v = (s.V(r, i) * mult) % m;
            x[r] = int64_t(v < 0 ? v + m : v);
            nz = nz || x[r] != 0;
        }
        if (nz) gens.push_back(std::move(x));
    }
    IntMatrix out(int(gens.size()), a.cols(), m);
    for (size_t r = 0; r < gens.size(); ++r) out.set_row(int(r), gens[r]);
    return out;
}

std::optional<std::vector<int64_t>> solve(const IntMatrix& a, const std::vector<int64_t>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
    if (a.modulus() == 0) {
        SnfResult s = smith_normal_form(a);
        // A x = b  <=>  D (V^{-1} x) = U b; solve componentwise.
        std::vector<BigInt> ub(a.rows());
        for (int i = 0; i < a.rows(); ++i) {
            BigInt acc = 0;
            for (int j = 0; j < a.rows(); ++j)
                if (s.U(i, j) != 0 && b[j] != 0) acc += s.U(i, j) * b[j];
            ub[i] = acc;
        }
        std::vector<BigInt> y(a.cols());
        for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) {
            const BigInt& d = s.D(i, i);
            if (d == 0) {
                if (ub[i] != 0) return std::nullopt;
            } else {
                if (ub[i] % d != 0) return std::nullopt;
                y[i] = ub[i] / d;
            }
        }
        for (int i = std::min(a.rows(), a.cols()); i < a.rows(); ++i)
            if (ub[i] != 0) return std::nullopt;
        std::vector<BigInt> x(a.cols());
        for (int r = 0; r < a.cols(); ++r) {
            BigInt acc = 0;
            for (int c = 0; c < a.cols(); ++c)
                if (s.V(r, c) != 0 && y[c] != 0) acc += s.V(r, c) * y[c];
            x[r] = acc;
        }
        // size-reduce against the kernel lattice so the narrowed result is small
        auto ker = kernel_big(a);
        hnf_reduce_vector(x, ker);
        std::vector<int64_t> out(a.cols());
        for (int i = 0; i < a.cols(); ++i) out[i] = narrow(x[i]);
        return out;
    }
    // Z/m via the SNF of the integer lift: solve d_i z_i = (U b)_i (mod m).
    int64_t m = a.modulus();
    SnfResult s = smith_normal_form(a.with_modulus(0));
    std::vector<BigInt> ub(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        BigInt acc = 0;
        for (int j = 0; j < a.rows(); ++j)
            if (s.U(i, j) != 0 && b[j] != 0) acc += s.U(i, j) * b[j];
        ub[i] = ((acc % m) + m) % m;
    }
    std::vector<int64_t> z(a.cols(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        BigInt d = i < s.rank ? s.divisors[i] : BigInt(0);
        if (i >= std::min(a.rows(), a.cols()) || d == 0) {
            if (ub[i] != 0) return std::nullopt;
            continue;
        }
        // d z = ub (mod m): solvable iff g = gcd(d, m) divides ub
        int64_t dm = int64_t(d % m);
        int64_t g = std::gcd(canon(dm, m), m);
        int64_t rhs = int64_t(ub[i]);
        if (rhs % g != 0) return std::nullopt;
        int64_t mg = m / g;
        // invert d/g modulo m/g
        int64_t dg = canon(dm, m) / g % mg;
        int64_t inv = 1;
        if (mg > 1) {
            inv = 0;
            for (int64_t t = 1; t < mg; ++t)
                if ((dg * t) % mg == 1) {
                    inv = t;
                    break;
                }
            if (inv == 0) return std::nullopt;  // cannot happen: dg is a unit mod mg
        }
        z[i] = canon((rhs / g) % mg * inv, mg);
    }
    std::vector<int64_t> x(a.cols(), 0);
    for (int r = 0; r < a.cols(); ++r) {
        BigInt acc = 0;
        for (int c = 0; c < a.cols(); ++c)
            if (z[c] != 0 && s.V(r, c) != 0) acc += s.V(r, c) * z[c];
        x[r] = canon(int64_t(acc % m), m);
    }
    return x;
}

Lattice lattice_intersection(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient != l2.ambient) throw std::invalid_argument("ambient dimension mismatch");
    // (u, w) with u B1 - w B2 = 0  <=>  (u, w) in left kernel of [B1; -B2].
    int r1 = l1.basis.rows(), r2 = l2.basis.rows();
    IntMatrix stacked(r1 + r2, l1.ambient);
    for (int r = 0; r < r1; ++r) stacked.set_row(r, l1.basis.row(r));
    for (int r = 0; r < r2; ++r) {
        auto v = l2.basis.row(r);
        for (auto& x : v) x = checked_sub(0, x);
        stacked.set_row(r1 + r, v);
    }
    auto lk = kernel_big(stacked.transposed());
    std::vector<std::vector<BigInt>> vecs;
    for (const auto& row : lk) {
        std::vector<BigInt> v(l1.ambient);
        for (int i = 0; i < r1; ++i) {
            if (row[i] == 0) continue;
            for (int c = 0; c < l1.ambient; ++c) v[c] += row[i] * l1.basis(i, c);
        }
        vecs.push_back(std::move(v));
    }
    auto basis = hnf_rows(std::move(vecs), l1.ambient);
    Lattice l;
    l.ambient = l1.ambient;
    l.basis = narrow_rows(basis, l1.ambient);
    return l;
}

bool lattice_membership(const Lattice& l, const std::vector<int64_t>& v) {
    if (int(v.size()) != l.ambient) throw std::invalid_argument("dimension mismatch");
    // the basis is Hermite-reduced, so greedy exact division along the
    // pivot columns decides membership
    std::vector<BigInt> w(v.begin(), v.end());
    for (int r = 0; r < l.basis.rows(); ++r) {
        auto row = l.basis.row(r);
        int pc = 0;
        while (row[pc] == 0) ++pc;
        if (w[pc] == 0) continue;
        if (w[pc] % row[pc] != 0) return false;
        BigInt q = w[pc] / row[pc];
        for (int c = pc; c < l.ambient; ++c) w[c] -= q * row[c];
    }
    return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

// span over Z/m as an integer lattice: rows of `gens` together with m e_i
Lattice lattice_mod_span(const IntMatrix& gens, int64_t m) {
    IntMatrix rows(gens.rows() + gens.cols(), gens.cols());
    for (int r = 0; r < gens.rows(); ++r) {
        auto row = gens.row(r);
        rows.set_row(r, row);
    }
    for (int c = 0; c < gens.cols(); ++c) rows.set(gens.rows() + c, c, m);
    return lattice_from_rows(rows);
}

bool lattice_equal(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient != l2.ambient || l1.rank() != l2.rank()) return false;
    for (int r = 0; r < l1.basis.rows(); ++r)
        if (!lattice_membership(l2, l1.basis.row(r))) return false;
    for (int r = 0; r < l2.basis.rows(); ++r)
        if (!lattice_membership(l1, l2.basis.row(r))) return false;
    return true;
}

bool span_contains_mod(const IntMatrix& big, const IntMatrix& small) {
    if (big.modulus() == 0 || big.modulus() != small.modulus() || big.cols() != small.cols())
        throw std::invalid_argument("span comparison needs matching Z/m generators");
    int64_t m = big.modulus();
    Lattice l = lattice_mod_span(big.with_modulus(0), m);
    for (int r = 0; r < small.rows(); ++r)
        if (!lattice_membership(l, small.row(r))) return false;
    return true;
}

bool span_equal_mod(const IntMatrix& a, const IntMatrix& b) {
    return span_contains_mod(a, b) && span_contains_mod(b, a);
}

}  // namespace prism
