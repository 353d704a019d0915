// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <immintrin.h>

#include "abwave/simd.hpp"

// AVX2 variants of the dense inner loops. Complex arrays are interleaved
// [re, im] pairs, so a 256-bit lane holds two complex doubles.

namespace abwave::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Reduce an accumulator of interleaved [re, im] pairs.
inline cplx hsum_cplx(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

cplx dot_rc(const double* w, const cplx* v, std::size_t n) {
    const double* vd = reinterpret_cast<const double*>(v);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d wv = _mm256_loadu_pd(w + i);
        __m256d wlo = _mm256_permute4x64_pd(wv, 0b01'01'00'00); // w0 w0 w1 w1
        __m256d whi = _mm256_permute4x64_pd(wv, 0b11'11'10'10); // w2 w2 w3 w3
        acc0 = _mm256_fmadd_pd(wlo, _mm256_loadu_pd(vd + 2 * i), acc0);
        acc1 = _mm256_fmadd_pd(whi, _mm256_loadu_pd(vd + 2 * i + 4), acc1);
    }
    cplx r = hsum_cplx(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) r += w[i] * v[i];
    return r;
}

// Accumulate elementwise products a*b and a*swap(b); the real/imag parts of
// the complex dot are signed horizontal sums of the two accumulators.
cplx dot_cc(const cplx* a, const cplx* b, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    __m256d accP = _mm256_setzero_pd(); // ar*br, ai*bi pairs
    __m256d accQ = _mm256_setzero_pd(); // ar*bi, ai*br pairs
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(ad + 2 * i);
        __m256d bv = _mm256_loadu_pd(bd + 2 * i);
        __m256d bs = _mm256_permute_pd(bv, 0b0101);
        accP = _mm256_fmadd_pd(av, bv, accP);
        accQ = _mm256_fmadd_pd(av, bs, accQ);
    }
    // re = sum over pairs (P_even - P_odd), im = sum (Q_even + Q_odd)
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    double re = hsum(_mm256_xor_pd(accP, sign));
    double im = hsum(accQ);
    cplx r(re, im);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

cplx dot_cjc(const cplx* a, const cplx* b, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    __m256d accP = _mm256_setzero_pd();
    __m256d accQ = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(ad + 2 * i);
        __m256d bv = _mm256_loadu_pd(bd + 2 * i);
        __m256d bs = _mm256_permute_pd(bv, 0b0101);
        accP = _mm256_fmadd_pd(av, bv, accP);
        accQ = _mm256_fmadd_pd(av, bs, accQ);
    }
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    double re = hsum(accP);
    double im = hsum(_mm256_xor_pd(accQ, sign));
    cplx r(re, im);
    for (; i < n; ++i) r += std::conj(a[i]) * b[i];
    return r;
}

void mul_cc(cplx* a, const cplx* b, std::size_t n) {
    double* ad = reinterpret_cast<double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(ad + 2 * i);
        __m256d bv = _mm256_loadu_pd(bd + 2 * i);
        __m256d are = _mm256_movedup_pd(av);           // ar ar
        __m256d aim = _mm256_permute_pd(av, 0b1111);   // ai ai
        __m256d bs = _mm256_permute_pd(bv, 0b0101);    // bi br
        __m256d prod = _mm256_fmaddsub_pd(are, bv, _mm256_mul_pd(aim, bs));
        _mm256_storeu_pd(ad + 2 * i, prod);
    }
    for (; i < n; ++i) a[i] *= b[i];
}

void axpy_diff(cplx* out, const cplx* back, const cplx* fwd, double w,
               std::size_t n) {
    double* od = reinterpret_cast<double*>(out);
    const double* bd = reinterpret_cast<const double*>(back);
    const double* fd = reinterpret_cast<const double*>(fwd);
    const __m256d wv = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(bd + 2 * i),
                                     _mm256_loadu_pd(fd + 2 * i));
        __m256d o = _mm256_fmadd_pd(wv, diff, _mm256_loadu_pd(od + 2 * i));
        _mm256_storeu_pd(od + 2 * i, o);
    }
    for (; i < n; ++i) out[i] += w * (back[i] - fwd[i]);
}

} // namespace

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

extern const Kernels kernels = {dot_rc, dot_cc, dot_cjc, mul_cc, axpy_diff,
                                "avx2"};

} // namespace abwave::simd::avx2
