#include "prism/kernels.hpp"

namespace prism::kern {

namespace {

void add_scalar(uint8_t* r, const uint8_t* a, const uint8_t* b, size_t n, uint8_t m) {
    for (size_t i = 0; i < n; ++i) {
        uint8_t s = uint8_t(a[i] + b[i]);
        r[i] = s >= m ? uint8_t(s - m) : s;
    }
}

void sub_scalar(uint8_t* r, const uint8_t* a, const uint8_t* b, size_t n, uint8_t m) {
    for (size_t i = 0; i < n; ++i) {
        uint8_t s = uint8_t(a[i] + m - b[i]);
        r[i] = s >= m ? uint8_t(s - m) : s;
    }
}

void axpy_scalar(uint8_t* r, const uint8_t* a, uint8_t c, size_t n, uint8_t m) {
    if (c == 0) return;
    for (size_t i = 0; i < n; ++i) r[i] = uint8_t((r[i] + c * a[i]) % m);
}

void scale_scalar(uint8_t* r, uint8_t c, size_t n, uint8_t m) {
    for (size_t i = 0; i < n; ++i) r[i] = uint8_t((c * r[i]) % m);
}

const Ops scalar_table{add_scalar, sub_scalar, axpy_scalar, scale_scalar};

const Ops& pick() {
    if (const Ops* v = avx2_ops()) return *v;
    return scalar_table;
}

}  // namespace

const Ops& scalar_ops() { return scalar_table; }

const Ops& ops() {
    static const Ops& chosen = pick();
    return chosen;
}

bool using_avx2() { return &ops() != &scalar_table; }

size_t find_nonzero(const uint8_t* a, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint64_t w;
        __builtin_memcpy(&w, a + i, 8);
        if (w != 0) break;
    }
    for (; i < n; ++i)
        if (a[i]) return i;
    return n;
}

uint8_t inv_mod(uint8_t a, uint8_t m) {
    a = uint8_t(a % m);
    for (uint8_t x = 1; x < m; ++x)
        if (uint8_t((a * x) % m) == 1) return x;
    return 0;
}

}  // namespace prism::kern
