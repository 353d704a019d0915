// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "abwave/common.hpp"

namespace abwave::transforms {

/// In-place radix-2 FFT, n a power of two. Forward uses e^{-2 pi i jk/n};
/// the inverse includes the 1/n factor.
void fft_pow2(cplx* data, std::size_t n, bool inverse);

inline void fft_pow2(std::vector<cplx>& v, bool inverse) {
    fft_pow2(v.data(), v.size(), inverse);
}

} // namespace abwave::transforms
