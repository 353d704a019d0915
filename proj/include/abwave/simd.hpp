// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>

#include "abwave/common.hpp"

// Runtime-dispatched arithmetic kernels. The transform stack is built on a
// handful of dense inner loops (kernel-table correlations, pointwise complex
// products, principal-value pair sums); each has a scalar reference
// implementation and an AVX2 variant selected once at startup. The active
// backend can be forced with the ABWAVE_SIMD environment variable
// ("scalar" or "avx2") or force_backend().

namespace abwave::simd {

struct Kernels {
    // sum_i w[i]*v[i], real weights times complex values
    cplx (*dot_rc)(const double* w, const cplx* v, std::size_t n);
    // sum_i a[i]*b[i], no conjugation
    cplx (*dot_cc)(const cplx* a, const cplx* b, std::size_t n);
    // sum_i conj(a[i])*b[i]
    cplx (*dot_cjc)(const cplx* a, const cplx* b, std::size_t n);
    // a[i] *= b[i]
    void (*mul_cc)(cplx* a, const cplx* b, std::size_t n);
    // out[i] += w*(back[i] - fwd[i])
    void (*axpy_diff)(cplx* out, const cplx* back, const cplx* fwd, double w,
                      std::size_t n);
    const char* name;
};

const Kernels& active();
const Kernels& scalar_kernels();
bool avx2_available();

/// Force a backend by name ("scalar" | "avx2"). Throws if unavailable.
void force_backend(const std::string& name);

inline cplx dot_rc(const double* w, const cplx* v, std::size_t n) {
    return active().dot_rc(w, v, n);
}
inline cplx dot_cc(const cplx* a, const cplx* b, std::size_t n) {
    return active().dot_cc(a, b, n);
}
inline cplx dot_cjc(const cplx* a, const cplx* b, std::size_t n) {
    return active().dot_cjc(a, b, n);
}
inline void mul_cc(cplx* a, const cplx* b, std::size_t n) {
    active().mul_cc(a, b, n);
}
inline void axpy_diff(cplx* out, const cplx* back, const cplx* fwd, double w,
                      std::size_t n) {
    active().axpy_diff(out, back, fwd, w, n);
}

} // namespace abwave::simd
