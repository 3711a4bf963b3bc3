#include <doctest.h>

#include <random>

#include "prism/kernels.hpp"

using namespace prism;

namespace {

std::vector<uint8_t> random_vec(std::mt19937& rng, size_t n, uint8_t m) {
    std::uniform_int_distribution<int> d(0, m - 1);
    std::vector<uint8_t> v(n);
    for (auto& x : v) x = uint8_t(d(rng));
    return v;
}

}  // namespace

TEST_CASE("scalar and dispatched kernels agree") {
    std::mt19937 rng(20240811);
    const auto& s = kern::scalar_ops();
    const auto& d = kern::ops();
    for (uint8_t m : {uint8_t(3), uint8_t(9)}) {
        for (size_t n : {size_t(0), size_t(1), size_t(31), size_t(32), size_t(33), size_t(257), size_t(1024)}) {
            auto a = random_vec(rng, n, m);
            auto b = random_vec(rng, n, m);
            std::vector<uint8_t> r1(n), r2(n);
            s.add(r1.data(), a.data(), b.data(), n, m);
            d.add(r2.data(), a.data(), b.data(), n, m);
            CHECK(r1 == r2);
            s.sub(r1.data(), a.data(), b.data(), n, m);
            d.sub(r2.data(), a.data(), b.data(), n, m);
            CHECK(r1 == r2);
            for (uint8_t c = 0; c < m; ++c) {
                auto x1 = a, x2 = a;
                s.axpy(x1.data(), b.data(), c, n, m);
                d.axpy(x2.data(), b.data(), c, n, m);
                CHECK(x1 == x2);
                auto y1 = a, y2 = a;
                s.scale(y1.data(), c, n, m);
                d.scale(y2.data(), c, n, m);
                CHECK(y1 == y2);
            }
        }
    }
}

TEST_CASE("avx2 variant exercised when supported") {
    if (const auto* v = kern::avx2_ops()) {
        std::mt19937 rng(7);
        for (uint8_t m : {uint8_t(3), uint8_t(9)}) {
            auto a = random_vec(rng, 555, m);
            auto b = random_vec(rng, 555, m);
            std::vector<uint8_t> r1(555), r2(555);
            kern::scalar_ops().add(r1.data(), a.data(), b.data(), 555, m);
            v->add(r2.data(), a.data(), b.data(), 555, m);
            CHECK(r1 == r2);
            for (uint8_t c = 0; c < m; ++c) {
                auto x1 = a, x2 = a;
                kern::scalar_ops().axpy(x1.data(), b.data(), c, 555, m);
                v->axpy(x2.data(), b.data(), c, 555, m);
                CHECK(x1 == x2);
            }
        }
    }
}

TEST_CASE("kernel arithmetic is exact over the full operand range") {
    // every (r, a, c) combination for both moduli
    for (uint8_t m : {uint8_t(3), uint8_t(9)}) {
        for (int r = 0; r < m; ++r)
            for (int a = 0; a < m; ++a)
                for (int c = 0; c < m; ++c) {
                    std::vector<uint8_t> v(40, uint8_t(r)), w(40, uint8_t(a));
                    kern::ops().axpy(v.data(), w.data(), uint8_t(c), 40, m);
                    for (auto x : v) CHECK(int(x) == (r + c * a) % m);
                }
    }
}

TEST_CASE("find_nonzero") {
    std::vector<uint8_t> v(100, 0);
    CHECK(kern::find_nonzero(v.data(), v.size()) == 100);
    v[63] = 2;
    CHECK(kern::find_nonzero(v.data(), v.size()) == 63);
    v[0] = 1;
    CHECK(kern::find_nonzero(v.data(), v.size()) == 0);
}

TEST_CASE("modular inverses") {
    CHECK(kern::inv_mod(2, 3) == 2);
    CHECK(kern::inv_mod(1, 3) == 1);
    CHECK(kern::inv_mod(0, 3) == 0);
    for (uint8_t a = 1; a < 9; ++a) {
        uint8_t i = kern::inv_mod(a, 9);
        if (a % 3 == 0) CHECK(i == 0);
        else CHECK((a * i) % 9 == 1);
    }
}
