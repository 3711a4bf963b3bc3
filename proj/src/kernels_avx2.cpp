// AVX2 variants of the mod-m byte kernels.  Compiled with -mavx2; callers
// reach them only through the dispatch table, which checks CPU support.

#include "prism/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace prism::kern {

namespace {

// values in [0, 2m) -> [0, m)
inline __m256i fold_once(__m256i x, __m256i vm) {
    __m256i ge = _mm256_cmpgt_epi8(vm, x);             // vm > x  <=>  x < m
    __m256i adj = _mm256_andnot_si256(ge, vm);         // m where x >= m
    return _mm256_sub_epi8(x, adj);
}

void add_avx2(uint8_t* r, const uint8_t* a, const uint8_t* b, size_t n, uint8_t m) {
    __m256i vm = _mm256_set1_epi8(char(m));
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = fold_once(_mm256_add_epi8(va, vb), vm);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), s);
    }
    for (; i < n; ++i) {
        uint8_t s = uint8_t(a[i] + b[i]);
        r[i] = s >= m ? uint8_t(s - m) : s;
    }
}

void sub_avx2(uint8_t* r, const uint8_t* a, const uint8_t* b, size_t n, uint8_t m) {
    __m256i vm = _mm256_set1_epi8(char(m));
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = fold_once(_mm256_sub_epi8(_mm256_add_epi8(va, vm), vb), vm);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), s);
    }
    for (; i < n; ++i) {
        uint8_t s = uint8_t(a[i] + m - b[i]);
        r[i] = s >= m ? uint8_t(s - m) : s;
    }
}

// r + c*a mod m via 16-bit lanes; products stay below 9 + 8*8 = 73.
// x mod 9 for x <= 292 uses q = (x*57) >> 9 (exact in that range).
inline __m256i mod9_epi16(__m256i x) {
    __m256i q = _mm256_srli_epi16(_mm256_mullo_epi16(x, _mm256_set1_epi16(57)), 9);
    return _mm256_sub_epi16(x, _mm256_add_epi16(_mm256_slli_epi16(q, 3), q));
}

void axpy_avx2(uint8_t* r, const uint8_t* a, uint8_t c, size_t n, uint8_t m) {
    if (c == 0) return;
    __m256i vm = _mm256_set1_epi8(char(m));
    size_t i = 0;
    if (m == 3 && c == 1) {
        add_avx2(r, r, a, n, m);
        return;
    }
    if (m == 3 && c == 2) {  // r - a mod 3
        sub_avx2(r, r, a, n, m);
        return;
    }
    __m256i vc = _mm256_set1_epi16(short(c));
    __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
        __m256i alo = _mm256_unpacklo_epi8(va, zero), ahi = _mm256_unpackhi_epi8(va, zero);
        __m256i rlo = _mm256_unpacklo_epi8(vr, zero), rhi = _mm256_unpackhi_epi8(vr, zero);
        rlo = mod9_epi16(_mm256_add_epi16(rlo, _mm256_mullo_epi16(alo, vc)));
        rhi = mod9_epi16(_mm256_add_epi16(rhi, _mm256_mullo_epi16(ahi, vc)));
        __m256i packed = _mm256_packus_epi16(rlo, rhi);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), packed);
    }
    (void)vm;
    for (; i < n; ++i) r[i] = uint8_t((r[i] + c * a[i]) % m);
}

void scale_avx2(uint8_t* r, uint8_t c, size_t n, uint8_t m) {
    if (c == 1) return;
    size_t i = 0;
    if (c == 0) {
        __builtin_memset(r, 0, n);
        return;
    }
    if (m == 3 && c == 2) {  // 2x = -x mod 3
        __m256i vm = _mm256_set1_epi8(3);
        for (; i + 32 <= n; i += 32) {
            __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
            __m256i neg = fold_once(_mm256_sub_epi8(vm, vr), vm);  // 3-0=3 folds to 0
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), neg);
        }
    } else if (m == 9) {
        __m256i vc = _mm256_set1_epi16(short(c));
        __m256i zero = _mm256_setzero_si256();
        for (; i + 32 <= n; i += 32) {
            __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
            __m256i lo = mod9_epi16(_mm256_mullo_epi16(_mm256_unpacklo_epi8(vr, zero), vc));
            __m256i hi = mod9_epi16(_mm256_mullo_epi16(_mm256_unpackhi_epi8(vr, zero), vc));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), _mm256_packus_epi16(lo, hi));
        }
    }
    for (; i < n; ++i) r[i] = uint8_t((c * r[i]) % m);
}

const Ops avx2_table{add_avx2, sub_avx2, axpy_avx2, scale_avx2};

}  // namespace

const Ops* avx2_ops() {
    static const Ops* table = __builtin_cpu_supports("avx2") ? &avx2_table : nullptr;
    return table;
}

}  // namespace prism::kern

#else

namespace prism::kern {
const Ops* avx2_ops() { return nullptr; }
}  // namespace prism::kern

#endif
