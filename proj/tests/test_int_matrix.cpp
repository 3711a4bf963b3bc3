#include <doctest.h>

#include <random>

#include "prism/int_matrix.hpp"
#include "prism/mod_matrix.hpp"

using namespace prism;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, d(rng));
    return m;
}

bool is_diagonal_chain(const SnfResult& s) {
    for (int r = 0; r < s.D.rows(); ++r)
        for (int c = 0; c < s.D.cols(); ++c)
            if (r != c && s.D(r, c) != 0) return false;
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i)
        if (s.divisors[i + 1] % s.divisors[i] != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("SNF of trivial matrices") {
    SnfResult z = smith_normal_form(IntMatrix(4, 3));
    CHECK(z.rank == 0);
    CHECK(z.divisors.empty());
    SnfResult id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.divisors == std::vector<BigInt>{1, 1, 1});
}

TEST_CASE("U A V = D on random matrices, with unimodular U and V") {
    std::mt19937 rng(42);
    for (int it = 0; it < 100; ++it) {
        int rows = 1 + int(rng() % 30), cols = 1 + int(rng() % 30);
        IntMatrix a = random_matrix(rng, rows, cols);
        SnfResult s = smith_normal_form(a);
        CHECK(s.U * BigMatrix(a) * s.V == s.D);
        CHECK(is_diagonal_chain(s));
        CHECK(det(s.U) == s.det_u);
        CHECK(det(s.V) == s.det_v);
        // rank + kernel dimension = cols; random kernels need exact entries
        BigMatrix k = kernel_basis_exact(a);
        CHECK(s.rank + k.rows() == cols);
        BigMatrix prod = BigMatrix(a) * [&] {
            BigMatrix t(cols, k.rows());
            for (int r = 0; r < k.rows(); ++r)
                for (int c = 0; c < cols; ++c) t.at(c, r) = k(r, c);
            return t;
        }();
        CHECK(prod == BigMatrix(IntMatrix(rows, k.rows())));
    }
}

TEST_CASE("int64 kernel path on small matrices") {
    std::mt19937 rng(5150);
    for (int it = 0; it < 60; ++it) {
        int rows = 1 + int(rng() % 10), cols = 1 + int(rng() % 10);
        IntMatrix a = random_matrix(rng, rows, cols, -4, 4);
        IntMatrix k = kernel_basis(a);
        CHECK(smith_normal_form(a).rank + k.rows() == cols);
        for (int r = 0; r < k.rows(); ++r) {
            auto v = a.apply(k.row(r));
            CHECK(std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; }));
        }
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(IntMatrix::identity(4)).rows() == 0);
    // [3 3] over Z/9: kernel generated by (1,-1) and (3,0)
    IntMatrix a(1, 2, 9);
    a.set(0, 0, 3);
    a.set(0, 1, 3);
    IntMatrix k = kernel_basis(a);
    // oracle: enumerate all 81 pairs
    std::vector<std::vector<int64_t>> all;
    for (int64_t x = 0; x < 9; ++x)
        for (int64_t y = 0; y < 9; ++y)
            if ((3 * x + 3 * y) % 9 == 0) all.push_back({x, y});
    CHECK(all.size() == 27);
    for (const auto& v : all) CHECK(solve(k.transposed(), v).has_value());
    for (int r = 0; r < k.rows(); ++r) {
        auto v = a.apply(k.row(r));
        CHECK(std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; }));
    }
    std::vector<int64_t> g1{1, 8}, g2{3, 0};
    CHECK(solve(k.transposed(), g1).has_value());
    CHECK(solve(k.transposed(), g2).has_value());
}

TEST_CASE("solve") {
    IntMatrix id = IntMatrix::identity(3);
    std::vector<int64_t> b{4, -2, 7};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
    IntMatrix three(1, 1);
    three.set(0, 0, 3);
    CHECK(!solve(three, {1}).has_value());
    CHECK(solve(three, {6}).has_value());
    // random consistent systems
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        int rows = 1 + int(rng() % 12), cols = 1 + int(rng() % 12);
        IntMatrix a = random_matrix(rng, rows, cols, -4, 4);
        std::vector<int64_t> x0(cols);
        for (auto& v : x0) v = int64_t(rng() % 7) - 3;
        auto b2 = a.apply(x0);
        auto sol = solve(a, b2);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == b2);
    }
}

TEST_CASE("solve over Z/m with zero divisors") {
    IntMatrix a(1, 1, 9);
    a.set(0, 0, 3);
    CHECK(!solve(a, {1}).has_value());
    CHECK(!solve(a, {2}).has_value());
    auto x = solve(a, {6});
    REQUIRE(x.has_value());
    CHECK((3 * (*x)[0]) % 9 == 6);
}

TEST_CASE("hermite form idempotent and membership") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        int rows = 1 + int(rng() % 8), cols = 1 + int(rng() % 8);
        IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
        Lattice l = lattice_from_rows(m);
        Lattice l2 = lattice_from_rows(l.basis);
        CHECK(l.basis == l2.basis);
        // each original row is a member
        for (int r = 0; r < rows; ++r) CHECK(lattice_membership(l, m.row(r)));
        std::vector<int64_t> zero(cols, 0);
        CHECK(lattice_membership(l, zero));
    }
}

TEST_CASE("lattice intersection 2Zx Z with Z x 2Z") {
    IntMatrix b1(2, 2), b2(2, 2);
    b1.set(0, 0, 2);
    b1.set(1, 1, 1);
    b2.set(0, 0, 1);
    b2.set(1, 1, 2);
    Lattice l1 = lattice_from_rows(b1), l2 = lattice_from_rows(b2);
    Lattice in = lattice_intersection(l1, l2);
    IntMatrix expect(2, 2);
    expect.set(0, 0, 2);
    expect.set(1, 1, 2);
    CHECK(lattice_equal(in, lattice_from_rows(expect)));
    CHECK(lattice_equal(lattice_intersection(l1, l1), l1));
}

TEST_CASE("intersection respects both memberships on random lattices") {
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + int(rng() % 5);
        Lattice l1 = lattice_from_rows(random_matrix(rng, 1 + int(rng() % n), n, -3, 3));
        Lattice l2 = lattice_from_rows(random_matrix(rng, 1 + int(rng() % n), n, -3, 3));
        Lattice in = lattice_intersection(l1, l2);
        for (int r = 0; r < in.basis.rows(); ++r) {
            CHECK(lattice_membership(l1, in.basis.row(r)));
            CHECK(lattice_membership(l2, in.basis.row(r)));
        }
    }
}

TEST_CASE("EchelonMod kernel agrees with IntMatrix kernel mod 3") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        int rows = 1 + int(rng() % 15), cols = 1 + int(rng() % 12);
        IntMatrix a = random_matrix(rng, rows, cols, 0, 2).with_modulus(3);
        EchelonMod e(cols, 3);
        for (int r = 0; r < rows; ++r) {
            std::vector<uint8_t> row(cols);
            for (int c = 0; c < cols; ++c) row[c] = uint8_t(a(r, c));
            e.add_row(row);
        }
        auto ker = e.kernel();
        IntMatrix ki = kernel_basis(a);
        // dimensions agree (mod 3 is a field, so the Z/m generating set has full rank
        // after reduction; compare via span equality)
        IntMatrix ke(int(ker.size()), cols, 3);
        for (size_t r = 0; r < ker.size(); ++r)
            for (int c = 0; c < cols; ++c) ke.set(int(r), c, ker[r][c]);
        if (ki.rows() == 0 || ke.rows() == 0) {
            CHECK(ki.rows() == ke.rows());
        } else {
            CHECK(span_equal_mod(ki, ke));
        }
        // every kernel vector annihilates
        for (const auto& v : ker) {
            std::vector<int64_t> vv(v.begin(), v.end());
            auto img = a.apply(vv);
            CHECK(std::all_of(img.begin(), img.end(), [](int64_t x) { return x == 0; }));
        }
    }
}

TEST_CASE("ModSolver matches IntMatrix solve mod 3") {
    std::mt19937 rng(29);
    for (int it = 0; it < 60; ++it) {
        int rows = 1 + int(rng() % 10), cols = 1 + int(rng() % 10);
        IntMatrix a = random_matrix(rng, rows, cols, 0, 2).with_modulus(3);
        std::vector<std::vector<uint8_t>> eq(rows, std::vector<uint8_t>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) eq[r][c] = uint8_t(a(r, c));
        ModSolver solver(eq, cols, 3);
        for (int jt = 0; jt < 5; ++jt) {
            std::vector<int64_t> b(rows);
            for (auto& v : b) v = int64_t(rng() % 3);
            std::vector<uint8_t> b8(b.begin(), b.end());
            auto s1 = solve(a, b);
            auto s2 = solver.solve(b8);
            CHECK(s1.has_value() == s2.has_value());
            if (s2) {
                std::vector<int64_t> x(s2->begin(), s2->end());
                CHECK(a.apply(x) == b);
            }
        }
    }
}

TEST_CASE("matrix json round trip") {
    std::mt19937 rng(3);
    IntMatrix a = random_matrix(rng, 3, 5);
    CHECK(IntMatrix::from_json(a.to_json()) == a);
}
