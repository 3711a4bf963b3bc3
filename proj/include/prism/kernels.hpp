#pragma once

// Byte-vector arithmetic mod m (m = 3 or 9) behind a runtime-dispatched
// function table.  Scalar reference implementations always exist; an AVX2
// variant is selected at startup when the CPU supports it.  Dense mod-m
// row reduction is the hot path of the cochain/cohomology code, so these
// loops are the ones worth vectorizing.

#include <cstddef>
#include <cstdint>

namespace prism::kern {

struct Ops {
    // r[i] = (a[i] + b[i]) % m
    void (*add)(uint8_t* r, const uint8_t* a, const uint8_t* b, size_t n, uint8_t m);
    // r[i] = (a[i] + m - b[i]) % m
    void (*sub)(uint8_t* r, const uint8_t* a, const uint8_t* b, size_t n, uint8_t m);
    // r[i] = (r[i] + c * a[i]) % m, 0 <= c < m
    void (*axpy)(uint8_t* r, const uint8_t* a, uint8_t c, size_t n, uint8_t m);
    // r[i] = (c * r[i]) % m
    void (*scale)(uint8_t* r, uint8_t c, size_t n, uint8_t m);
};

// Reference implementation (plain loops).
const Ops& scalar_ops();
// AVX2 implementation, or nullptr when unsupported by this CPU.
const Ops* avx2_ops();
// The dispatched table used by default throughout the library.
const Ops& ops();
bool using_avx2();

// Index of the first nonzero byte, or n if none.
size_t find_nonzero(const uint8_t* a, size_t n);

// Multiplicative inverse mod m for units; 0 for non-units.
uint8_t inv_mod(uint8_t a, uint8_t m);

}  // namespace prism::kern
