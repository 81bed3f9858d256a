#pragma once

#include "tpctf/tensor.hpp"

namespace tpctf {

/// In-place unnormalized DFT over all axes; sign -1 forward, +1 backward.
void dft_inplace(const std::vector<size_t>& shape, std::complex<double>* data, int sign);

/// Forward DFT of a real tensor.
CTensor fft_of_real(const Tensor& t);
CTensor fft(const CTensor& t);

/// Normalized inverse DFT.
CTensor ifft(CTensor t);

/// Normalized inverse DFT, real part; *max_imag reports the largest
/// imaginary remainder when requested.
Tensor ifft_real(CTensor t, double* max_imag = nullptr);

}  // namespace tpctf
