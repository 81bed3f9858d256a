#pragma once

#include <cstdint>

#include "tpctf/transform.hpp"

namespace tpctf {

/// 10*log10(255^2 / MSE); +infinity when the inputs are identical.
double psnr(const Tensor& u, const Tensor& v);

/// u + sigma * z with z i.i.d. standard normal from a seeded generator;
/// bit-for-bit reproducible, no clipping.
Tensor add_gaussian_noise(const Tensor& u, double sigma, std::uint64_t seed);

/// {0,1} mask with exactly floor(missing_fraction * N) zeros, placed by a
/// seeded shuffle.
Tensor make_random_mask(const std::vector<size_t>& shape, double missing_fraction,
                        std::uint64_t seed);

struct ShrinkConfig {
  double sigma = 0.0;     // noise std on the 0..255 pixel scale
  int window_radius = 3;  // 3 -> 7x7 window for images; 1 -> 3x3x3 for video
  double constant = 1.7320508075688772;  // sqrt(3) images, 2 video
};

/// Bivariate shrinkage kernel for one coefficient and its parent.
cplx shrink_bivariate(cplx c, cplx parent, double sigma_n, double sigma_c, double constant);

/// l2 norms of the analysis elements, per level and band (products of
/// per-axis cascade-filter norms); index [j-1][band] follows band_labels().
struct BandNorms {
  std::vector<std::vector<double>> level_band;
  double low = 0.0;
};

BandNorms compute_band_norms(const FilterBank1D& bank, int d, int J, int ref_grid = 8192);

/// In-place bivariate shrinkage of every high band; the low band is untouched.
/// Parents come from the same band one level coarser (coarsest level: 0).
void bivariate_shrink(CoeffPyramid& p, const ShrinkConfig& cfg, const BandNorms& norms);

/// Pad symmetrically to an admissible size (>= min_pad per side), transform,
/// shrink, reconstruct, crop, clamp to [0, 255].
Tensor denoise(const Tensor& u, const FilterBank1D& bank, int J, const ShrinkConfig& cfg,
               size_t min_pad = 16);

struct InpaintConfig {
  int iterations = 20;
  double lambda_max = 128.0;
  double lambda_min = 0.5;   // pipelines raise this to max(2*sigma, 0.5)
  double sigma = 0.0;
  int window_radius = 3;     // final denoise pass when sigma > 0
  double constant = 1.7320508075688772;
};

/// Iterative soft thresholding with a geometric threshold schedule and
/// per-band scaling by the element norms; observed pixels are reimposed each
/// iteration (noisy case: averaged with the estimate).
Tensor inpaint(const Tensor& y, const Tensor& mask, const FilterBank1D& bank, int J,
               const InpaintConfig& cfg, size_t min_pad = 16);

Tensor clamp_0_255(Tensor t);

}  // namespace tpctf
