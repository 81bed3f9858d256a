#include "tpctf/processing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tpctf/rng.hpp"

namespace tpctf {

double psnr(const Tensor& u, const Tensor& v) {
  if (!u.same_shape(v)) throw ShapeError("psnr: shape mismatch");
  double mse = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    mse += d * d;
  }
  mse /= static_cast<double>(u.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

Tensor add_gaussian_noise(const Tensor& u, double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw ConfigError("noise: sigma must be >= 0");
  Tensor out = u;
  if (sigma == 0.0) return out;
  SplitMix64 rng(seed);
  for (size_t i = 0; i < out.size(); ++i) out[i] += sigma * rng.gaussian();
  return out;
}

Tensor make_random_mask(const std::vector<size_t>& shape, double missing_fraction,
                        std::uint64_t seed) {
  if (missing_fraction < 0.0 || missing_fraction >= 1.0) {
    throw ConfigError("mask: missing fraction must be in [0, 1)");
  }
  Tensor mask(shape);
  const size_t n = mask.size();
  const size_t zeros = static_cast<size_t>(missing_fraction * static_cast<double>(n));
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  SplitMix64 rng(seed);
  for (size_t i = n; i-- > 1;) {
    std::swap(idx[i], idx[rng.below(i + 1)]);
  }
  for (size_t i = 0; i < n; ++i) mask[idx[i]] = i < zeros ? 0.0 : 1.0;
  return mask;
}

cplx shrink_bivariate(cplx c, cplx parent, double sigma_n, double sigma_c, double constant) {
  if (sigma_c <= 0.0) return 0.0;
  const double r = std::sqrt(std::norm(c) + std::norm(parent));
  if (r == 0.0) return 0.0;
  // |c| > lambda_c  <=>  r > constant * sigma_n^2 / sigma_c
  const double t = constant * sigma_n * sigma_n / sigma_c;
  const double kept = r - t;
  if (kept <= 0.0) return 0.0;
  return c * (kept / r);
}

namespace {

double axis_element_norm_sq(const FilterBank1D& bank, FilterLabel label, int j, int lattice,
                            int ref_grid) {
  cvec symbol = multilevel_filter(bank, label, j, ref_grid);
  double acc = 0.0;
  for (const cplx& v : symbol) acc += std::norm(v);
  return static_cast<double>(lattice) * acc / static_cast<double>(ref_grid);
}

}  // namespace

BandNorms compute_band_norms(const FilterBank1D& bank, int d, int J, int ref_grid) {
  if (ref_grid % static_cast<int>(required_divisor(bank.kind(), J)) != 0) {
    throw GridError("band norms: reference grid not divisible by the transform divisor");
  }
  const std::vector<BandLabel> labels = band_labels(bank, d);
  const int hf = high_factor(bank.kind());

  BandNorms out;
  out.level_band.resize(static_cast<size_t>(J));
  for (int j = 1; j <= J; ++j) {
    // one 1-D norm per distinct axis label, combined per band
    std::map<FilterLabel, double> axis_norm;
    for (const FilterLabel& l : bank.high_labels()) {
      axis_norm[l] = axis_element_norm_sq(bank, l, j, (1 << (j - 1)) * hf, ref_grid);
    }
    auto& row = out.level_band[static_cast<size_t>(j - 1)];
    row.reserve(labels.size());
    for (const BandLabel& label : labels) {
      double prod = 1.0;
      for (const FilterLabel& l : label) prod *= axis_norm[l];
      row.push_back(std::sqrt(prod));
    }
  }
  double low_sq = axis_element_norm_sq(bank, FilterLabel::a(), J, 1 << J, ref_grid);
  out.low = std::pow(std::sqrt(low_sq), d);
  return out;
}

namespace {

// Mean squared modulus over a centered window with periodic wrap.
double window_energy(const CTensor& band, const std::vector<size_t>& idx, int radius) {
  const size_t d = band.ndim();
  const auto& shape = band.shape();
  const auto strides = band.strides();
  const int w = 2 * radius + 1;
  size_t count = 1;
  for (size_t ax = 0; ax < d; ++ax) count *= static_cast<size_t>(w);

  double acc = 0.0;
  std::vector<int> off(d, -radius);
  while (true) {
    size_t lin = 0;
    for (size_t ax = 0; ax < d; ++ax) {
      const long long n = static_cast<long long>(shape[ax]);
      long long p = (static_cast<long long>(idx[ax]) + off[ax]) % n;
      if (p < 0) p += n;
      lin += static_cast<size_t>(p) * strides[ax];
    }
    acc += std::norm(band[lin]);
    size_t ax = d;
    bool done = true;
    while (ax-- > 0) {
      if (++off[ax] <= radius) {
        done = false;
        break;
      }
      off[ax] = -radius;
    }
    if (done) break;
  }
  return acc / static_cast<double>(count);
}

}  // namespace

void bivariate_shrink(CoeffPyramid& p, const ShrinkConfig& cfg, const BandNorms& norms) {
  if (static_cast<int>(norms.level_band.size()) < p.levels_count) {
    throw ConfigError("shrink: missing band norms");
  }
  const size_t d = p.low.ndim();
  for (int j = 1; j <= p.levels_count; ++j) {
    Level& level = p.levels[static_cast<size_t>(j - 1)];
    const Level* parent_level =
        j < p.levels_count ? &p.levels[static_cast<size_t>(j)] : nullptr;
    for (size_t bi = 0; bi < level.bands.size(); ++bi) {
      Band& band = level.bands[bi];
      const CTensor* parent = parent_level ? &parent_level->bands[bi].coeffs : nullptr;
      const double sigma_n = cfg.sigma * norms.level_band[static_cast<size_t>(j - 1)][bi];
      const double sn2 = sigma_n * sigma_n;

      const CTensor noisy = band.coeffs;  // window statistics from pre-shrink values
      const auto& shape = noisy.shape();
      const auto parent_strides = parent ? parent->strides() : std::vector<size_t>();
      std::vector<size_t> idx(d, 0);
      for (size_t lin = 0; lin < noisy.size(); ++lin) {
        const double energy = window_energy(noisy, idx, cfg.window_radius);
        const double sigma_c = energy > sn2 ? std::sqrt(energy - sn2) : 0.0;
        cplx cp = 0.0;
        if (parent) {
          size_t plin = 0;
          for (size_t ax = 0; ax < d; ++ax) plin += (idx[ax] / 2) * parent_strides[ax];
          cp = (*parent)[plin];
        }
        band.coeffs[lin] = shrink_bivariate(noisy[lin], cp, sigma_n, sigma_c, cfg.constant);
        for (size_t ax = d; ax-- > 0;) {
          if (++idx[ax] < shape[ax]) break;
          idx[ax] = 0;
        }
      }
    }
  }
}

Tensor clamp_0_255(Tensor t) {
  for (size_t i = 0; i < t.size(); ++i) t[i] = std::clamp(t[i], 0.0, 255.0);
  return t;
}

Tensor denoise(const Tensor& u, const FilterBank1D& bank, int J, const ShrinkConfig& cfg,
               size_t min_pad) {
  if (!(cfg.sigma > 0.0)) throw ConfigError("denoise: sigma must be positive");
  PadInfo pad;
  Tensor ext = sym_extend(u, admissible_shape(u.shape(), bank.kind(), J, min_pad), &pad);
  CoeffPyramid p = analyze(ext, bank, J);
  p.original_shape = pad.original_shape;
  p.pad_left = pad.pad_left;
  BandNorms norms = compute_band_norms(bank, static_cast<int>(u.ndim()), J);
  bivariate_shrink(p, cfg, norms);
  Tensor rec = synthesize(p, bank);
  return clamp_0_255(crop(rec, pad));
}

namespace {

void soft_threshold_bands(CoeffPyramid& p, double lambda, const BandNorms& norms) {
  for (int j = 1; j <= p.levels_count; ++j) {
    Level& level = p.levels[static_cast<size_t>(j - 1)];
    for (size_t bi = 0; bi < level.bands.size(); ++bi) {
      const double t = lambda * norms.level_band[static_cast<size_t>(j - 1)][bi];
      CTensor& c = level.bands[bi].coeffs;
      for (size_t i = 0; i < c.size(); ++i) {
        const double mag = std::abs(c[i]);
        c[i] = mag > t ? c[i] * ((mag - t) / mag) : cplx(0.0);
      }
    }
  }
}

}  // namespace

Tensor inpaint(const Tensor& y, const Tensor& mask, const FilterBank1D& bank, int J,
               const InpaintConfig& cfg, size_t min_pad) {
  if (!y.same_shape(mask)) throw ShapeError("inpaint: mask shape mismatch");
  if (cfg.iterations < 2) throw ConfigError("inpaint: need at least 2 iterations");
  if (!(cfg.lambda_max >= cfg.lambda_min) || !(cfg.lambda_min > 0.0)) {
    throw ConfigError("inpaint: thresholds must satisfy lambda_max >= lambda_min > 0");
  }
  bool any_observed = false;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != 0.0) {
      any_observed = true;
      break;
    }
  }
  if (!any_observed) throw ConfigError("inpaint: mask observes no pixels");

  PadInfo pad;
  const auto target = admissible_shape(y.shape(), bank.kind(), J, min_pad);
  Tensor ye = sym_extend(y, target, &pad);
  Tensor me = sym_extend(mask, target);

  Tensor x(ye.shape());
  for (size_t i = 0; i < x.size(); ++i) x[i] = me[i] != 0.0 ? ye[i] : 0.0;

  const int d = static_cast<int>(y.ndim());
  BandNorms norms = compute_band_norms(bank, d, J);

  const int K = cfg.iterations;
  for (int k = 0; k < K; ++k) {
    const double lambda =
        cfg.lambda_max * std::pow(cfg.lambda_min / cfg.lambda_max,
                                  static_cast<double>(k) / static_cast<double>(K - 1));
    CoeffPyramid p = analyze(x, bank, J);
    soft_threshold_bands(p, lambda, norms);
    Tensor est = synthesize(p, bank);
    if (cfg.sigma == 0.0) {
      for (size_t i = 0; i < x.size(); ++i) x[i] = me[i] != 0.0 ? ye[i] : est[i];
    } else {
      for (size_t i = 0; i < x.size(); ++i) {
        x[i] = me[i] != 0.0 ? 0.5 * (est[i] + ye[i]) : est[i];
      }
    }
  }

  if (cfg.sigma > 0.0) {
    CoeffPyramid p = analyze(x, bank, J);
    ShrinkConfig sc;
    sc.sigma = cfg.sigma;
    sc.window_radius = cfg.window_radius;
    sc.constant = cfg.constant;
    bivariate_shrink(p, sc, norms);
    x = synthesize(p, bank);
  }
  return clamp_0_255(crop(x, pad));
}

}  // namespace tpctf
