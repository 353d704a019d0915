// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include "abwave/simd.hpp"

#include <cstdlib>
#include <stdexcept>

namespace abwave::simd {

namespace scalar {

static cplx dot_rc(const double* w, const cplx* v, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += w[i] * v[i].real();
        im += w[i] * v[i].imag();
    }
    return {re, im};
}

static cplx dot_cc(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

static cplx dot_cjc(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

static void mul_cc(cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
}

static void axpy_diff(cplx* out, const cplx* back, const cplx* fwd, double w,
                      std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += w * (back[i] - fwd[i]);
}

} // namespace scalar

const Kernels& scalar_kernels() {
    static const Kernels k = {scalar::dot_rc, scalar::dot_cc, scalar::dot_cjc,
                              scalar::mul_cc, scalar::axpy_diff, "scalar"};
    return k;
}

#if defined(ABWAVE_HAVE_AVX2)
namespace avx2 {
extern const Kernels kernels;
bool supported();
} // namespace avx2
#endif

bool avx2_available() {
#if defined(ABWAVE_HAVE_AVX2)
    return avx2::supported();
#else
    return false;
#endif
}

namespace {

const Kernels* select_default() {
    if (const char* env = std::getenv("ABWAVE_SIMD")) {
        std::string s(env);
        if (s == "scalar") return &scalar_kernels();
#if defined(ABWAVE_HAVE_AVX2)
        if (s == "avx2" && avx2::supported()) return &avx2::kernels;
#endif
        // unknown or unavailable backend requested: fall through to autodetect
    }
#if defined(ABWAVE_HAVE_AVX2)
    if (avx2::supported()) return &avx2::kernels;
#endif
    return &scalar_kernels();
}

const Kernels*& active_slot() {
    static const Kernels* slot = select_default();
    return slot;
}

} // namespace

const Kernels& active() { return *active_slot(); }

void force_backend(const std::string& name) {
    if (name == "scalar") {
        active_slot() = &scalar_kernels();
        return;
    }
#if defined(ABWAVE_HAVE_AVX2)
    if (name == "avx2") {
        if (!avx2::supported())
            throw std::runtime_error("simd: avx2 not supported on this cpu");
        active_slot() = &avx2::kernels;
        return;
    }
#endif
    throw std::runtime_error("simd: unknown backend '" + name + "'");
}

} // namespace abwave::simd
