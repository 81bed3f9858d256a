#pragma once

#include <span>

#include "tpctf/filterbank.hpp"
#include "tpctf/tensor.hpp"

namespace tpctf {

// ---- one-dimensional operators on frequency samples -------------------------

/// Analysis branch: alias-fold the product with the conjugated filter down by
/// the sampling factor, output length n/factor, normalized by factor^{-1/2}.
cvec transition_freq(std::span<const cplx> vhat, std::span<const cplx> fhat, int factor);

/// Synthesis branch: periodize up by the sampling factor and multiply by the
/// filter, output length n, normalized by factor^{+1/2}.
cvec subdivision_freq(std::span<const cplx> what, std::span<const cplx> fhat, int factor);

// ---- tensor-product bands ----------------------------------------------------

/// Per-axis filter labels of one high-pass band; length d.
using BandLabel = std::vector<FilterLabel>;

std::string to_string(const BandLabel& label);
BandLabel mirrored(const BandLabel& label);

/// Canonical enumeration of the d-dimensional high-pass set: all label tuples
/// over the bank's per-axis high set, minus the tuples that belong to the
/// recursive low branch (all-a for the odd bank, all-auxiliary otherwise).
std::vector<BandLabel> band_labels(const FilterBank1D& bank, int d);

/// Per-axis downsampling factor of the high-pass bands.
int high_factor(BankKind kind);

struct Band {
  BandLabel label;
  CTensor coeffs;
};

struct Level {
  std::vector<Band> bands;  // in band_labels() order
};

struct CoeffPyramid {
  BankKind kind = BankKind::Ctf6Down;
  int levels_count = 0;           // J
  Tensor low;                     // shape n / 2^J per axis
  std::vector<Level> levels;      // levels[j-1] holds scale j
  std::vector<size_t> input_shape;

  // Set by pipelines that pad before transforming.
  std::vector<size_t> original_shape;
  std::vector<size_t> pad_left;

  const Band& band(int j, const BandLabel& label) const;
  Band& band(int j, const BandLabel& label);

  /// Total coefficient energy: |low|^2 plus |w|^2 over every stored band.
  double energy() const;

  /// Stored scalar count under the conjugate-pair convention: a complex
  /// coefficient counts as two reals, halved again because mirrored bands
  /// duplicate each other for real input.
  size_t counted_scalars() const;
};

/// Axis divisor required by a J-level transform (2^{J+1} mixed, 2^J uniform).
size_t required_divisor(BankKind kind, int J);

/// J-level forward transform of a real tensor; every axis length must be
/// divisible by required_divisor().  J = 0 returns the input as the low band.
CoeffPyramid analyze(const Tensor& v, const FilterBank1D& bank, int J);

/// Backward transform; inverse of analyze for untouched pyramids.  *max_imag
/// reports the largest imaginary remainder (diagnostic; ~0 for pyramids that
/// came from real input).
Tensor synthesize(const CoeffPyramid& p, const FilterBank1D& bank, double* max_imag = nullptr);

// ---- boundary handling -------------------------------------------------------

struct PadInfo {
  std::vector<size_t> original_shape;
  std::vector<size_t> pad_left;
};

/// Half-point symmetric extension (E(-1-k) = v(k)) out to target_shape,
/// padding split evenly per axis (left gets the smaller half).
Tensor sym_extend(const Tensor& v, const std::vector<size_t>& target_shape, PadInfo* info = nullptr);

Tensor crop(const Tensor& v, const PadInfo& info);

/// Smallest per-axis extents >= shape + 2*min_pad that the J-level transform
/// accepts (multiples of required_divisor).
std::vector<size_t> admissible_shape(const std::vector<size_t>& shape, BankKind kind, int J,
                                     size_t min_pad);

}  // namespace tpctf
