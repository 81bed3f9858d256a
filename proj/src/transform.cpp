#include "tpctf/transform.hpp"

#include <algorithm>
#include <cmath>

#include "tpctf/fft.hpp"

namespace tpctf {

cvec transition_freq(std::span<const cplx> vhat, std::span<const cplx> fhat, int factor) {
  const size_t n = vhat.size();
  if (fhat.size() != n) throw ShapeError("transition: filter grid does not match signal grid");
  if (factor < 1 || n % static_cast<size_t>(factor) != 0) {
    throw ShapeError("transition: length not divisible by the sampling factor");
  }
  const size_t m = n / static_cast<size_t>(factor);
  const double scale = 1.0 / std::sqrt(static_cast<double>(factor));
  cvec out(m);
  for (size_t k = 0; k < m; ++k) {
    cplx acc = 0.0;
    for (int t = 0; t < factor; ++t) {
      const size_t i = k + static_cast<size_t>(t) * m;
      acc += vhat[i] * std::conj(fhat[i]);
    }
    out[k] = scale * acc;
  }
  return out;
}

cvec subdivision_freq(std::span<const cplx> what, std::span<const cplx> fhat, int factor) {
  const size_t n = fhat.size();
  if (factor < 1 || n % static_cast<size_t>(factor) != 0 ||
      what.size() != n / static_cast<size_t>(factor)) {
    throw ShapeError("subdivision: inconsistent lengths");
  }
  const size_t m = what.size();
  const double scale = std::sqrt(static_cast<double>(factor));
  cvec out(n);
  for (size_t k = 0; k < n; ++k) out[k] = scale * what[k % m] * fhat[k];
  return out;
}

std::string to_string(const BandLabel& label) {
  std::string s;
  for (size_t i = 0; i < label.size(); ++i) {
    if (i) s += "_";
    s += to_string(label[i]);
  }
  return s;
}

BandLabel mirrored(const BandLabel& label) {
  BandLabel out(label.size());
  for (size_t i = 0; i < label.size(); ++i) out[i] = label[i].mirrored();
  return out;
}

int high_factor(BankKind kind) { return kind == BankKind::Ctf6Down ? 4 : 2; }

std::vector<BandLabel> band_labels(const FilterBank1D& bank, int d) {
  if (d < 1) throw ShapeError("band_labels: dimension must be >= 1");
  const std::vector<FilterLabel> axis = bank.high_labels();
  const size_t base = axis.size();

  auto excluded = [&](const BandLabel& l) {
    // The tuples re-expressed through the recursive low branch.
    if (bank.kind() == BankKind::CtfOdd) {
      return std::all_of(l.begin(), l.end(),
                         [](const FilterLabel& f) { return f.kind == FilterLabel::Kind::A; });
    }
    return std::all_of(l.begin(), l.end(), [](const FilterLabel& f) { return f.is_auxiliary(); });
  };

  std::vector<BandLabel> out;
  BandLabel current(static_cast<size_t>(d), axis[0]);
  std::vector<size_t> odo(static_cast<size_t>(d), 0);
  while (true) {
    for (size_t i = 0; i < current.size(); ++i) current[i] = axis[odo[i]];
    if (!excluded(current)) out.push_back(current);
    // increment odometer, axis 0 most significant
    size_t i = current.size();
    while (i-- > 0) {
      if (++odo[i] < base) break;
      odo[i] = 0;
      if (i == 0) return out;
    }
  }
}

const Band& CoeffPyramid::band(int j, const BandLabel& label) const {
  for (const Band& b : levels.at(static_cast<size_t>(j - 1)).bands) {
    if (b.label == label) return b;
  }
  throw ShapeError("pyramid: no band " + to_string(label) + " at level " + std::to_string(j));
}

Band& CoeffPyramid::band(int j, const BandLabel& label) {
  return const_cast<Band&>(static_cast<const CoeffPyramid*>(this)->band(j, label));
}

double CoeffPyramid::energy() const {
  double acc = 0.0;
  for (size_t i = 0; i < low.size(); ++i) acc += low[i] * low[i];
  for (const Level& lv : levels) {
    for (const Band& b : lv.bands) {
      for (size_t i = 0; i < b.coeffs.size(); ++i) acc += std::norm(b.coeffs[i]);
    }
  }
  return acc;
}

size_t CoeffPyramid::counted_scalars() const {
  size_t acc = low.size();
  for (const Level& lv : levels) {
    for (const Band& b : lv.bands) acc += b.coeffs.size();  // 2 reals / 2 for the pair
  }
  return acc;
}

size_t required_divisor(BankKind kind, int J) {
  if (J < 0) throw ShapeError("levels must be >= 0");
  if (J == 0) return 1;
  return static_cast<size_t>(1) << (kind == BankKind::Ctf6Down ? J + 1 : J);
}

namespace {

// Apply the 1-D analysis fold along one axis of a frequency tensor.
CTensor fold_axis(const CTensor& v, const cvec& fhat, int factor, size_t axis) {
  const auto& shape = v.shape();
  const size_t n = shape[axis];
  const size_t m = n / static_cast<size_t>(factor);
  std::vector<size_t> out_shape = shape;
  out_shape[axis] = m;
  CTensor out(out_shape);

  size_t inner = 1;
  for (size_t i = axis + 1; i < shape.size(); ++i) inner *= shape[i];
  size_t outer = v.size() / (inner * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(factor));

  for (size_t o = 0; o < outer; ++o) {
    const cplx* src = v.data() + o * n * inner;
    cplx* dst = out.data() + o * m * inner;
    for (size_t k = 0; k < m; ++k) {
      for (int t = 0; t < factor; ++t) {
        const size_t row = k + static_cast<size_t>(t) * m;
        const cplx f = std::conj(fhat[row]);
        const cplx* s = src + row * inner;
        cplx* d = dst + k * inner;
        if (t == 0) {
          for (size_t i = 0; i < inner; ++i) d[i] = s[i] * f;
        } else {
          for (size_t i = 0; i < inner; ++i) d[i] += s[i] * f;
        }
      }
    }
    cplx* d = out.data() + o * m * inner;
    for (size_t i = 0; i < m * inner; ++i) d[i] *= scale;
  }
  return out;
}

// Apply the 1-D synthesis unfold along one axis, accumulating into `acc`
// (which has the upsampled shape).
void unfold_axis_add(CTensor& acc, const CTensor& w, const cvec& fhat, int factor, size_t axis) {
  const auto& shape = acc.shape();
  const size_t n = shape[axis];
  const size_t m = n / static_cast<size_t>(factor);
  if (w.shape()[axis] != m) throw ShapeError("unfold: inconsistent axis length");

  size_t inner = 1;
  for (size_t i = axis + 1; i < shape.size(); ++i) inner *= shape[i];
  size_t outer = acc.size() / (inner * n);
  const double scale = std::sqrt(static_cast<double>(factor));

  for (size_t o = 0; o < outer; ++o) {
    const cplx* src = w.data() + o * m * inner;
    cplx* dst = acc.data() + o * n * inner;
    for (size_t k = 0; k < n; ++k) {
      const cplx f = scale * fhat[k];
      const cplx* s = src + (k % m) * inner;
      cplx* d = dst + k * inner;
      for (size_t i = 0; i < inner; ++i) d[i] += s[i] * f;
    }
  }
}

CTensor unfold_axis(const CTensor& w, const cvec& fhat, int factor, size_t axis) {
  std::vector<size_t> shape = w.shape();
  shape[axis] *= static_cast<size_t>(factor);
  CTensor out(shape);
  unfold_axis_add(out, w, fhat, factor, axis);
  return out;
}

const SampledFilter& axis_filter(const FilterBank1D& bank, const FilterLabel& label) {
  return bank.filter(label);
}

}  // namespace

CoeffPyramid analyze(const Tensor& v, const FilterBank1D& bank, int J) {
  const size_t d = v.ndim();
  if (d == 0) throw ShapeError("analyze: scalar input");
  const size_t divisor = required_divisor(bank.kind(), J);
  for (size_t ax = 0; ax < d; ++ax) {
    if (v.shape()[ax] % divisor != 0) {
      throw ShapeError("analyze: axis " + std::to_string(ax) + " length " +
                       std::to_string(v.shape()[ax]) + " not divisible by " +
                       std::to_string(divisor));
    }
  }

  CoeffPyramid p;
  p.kind = bank.kind();
  p.levels_count = J;
  p.input_shape = v.shape();
  p.original_shape = v.shape();
  p.pad_left.assign(d, 0);
  if (J == 0) {
    p.low = v;
    return p;
  }

  const std::vector<BandLabel> labels = band_labels(bank, static_cast<int>(d));
  const int hf = high_factor(bank.kind());

  CTensor freq = fft_of_real(v);
  for (int j = 1; j <= J; ++j) {
    Level level;
    level.bands.reserve(labels.size());
    for (const BandLabel& label : labels) {
      CTensor t = freq;
      for (size_t ax = 0; ax < d; ++ax) {
        t = fold_axis(t, axis_filter(bank, label[ax]).samples(static_cast<int>(freq.shape()[ax])),
                      hf, ax);
      }
      level.bands.push_back({label, ifft(std::move(t))});
    }
    p.levels.push_back(std::move(level));

    for (size_t ax = 0; ax < d; ++ax) {
      freq = fold_axis(freq, bank.lowpass().samples(static_cast<int>(freq.shape()[ax])), 2, ax);
    }
  }
  p.low = ifft_real(std::move(freq));
  return p;
}

Tensor synthesize(const CoeffPyramid& p, const FilterBank1D& bank, double* max_imag) {
  if (p.kind != bank.kind()) throw ShapeError("synthesize: pyramid/bank kind mismatch");
  const size_t d = p.low.ndim();
  if (p.levels_count == 0) {
    if (max_imag) *max_imag = 0.0;
    return p.low;
  }
  const int hf = high_factor(bank.kind());

  CTensor freq = fft_of_real(p.low);
  for (int j = p.levels_count; j >= 1; --j) {
    // low branch up
    CTensor up;
    {
      CTensor t = std::move(freq);
      for (size_t ax = d; ax-- > 0;) {
        const size_t n_out = t.shape()[ax] * 2;
        t = unfold_axis(t, bank.lowpass().samples(static_cast<int>(n_out)), 2, ax);
      }
      up = std::move(t);
    }
    // band branches
    const Level& level = p.levels.at(static_cast<size_t>(j - 1));
    for (const Band& b : level.bands) {
      CTensor t = fft(b.coeffs);
      for (size_t ax = d; ax-- > 1;) {
        const size_t n_out = t.shape()[ax] * static_cast<size_t>(hf);
        t = unfold_axis(t, axis_filter(bank, b.label[ax]).samples(static_cast<int>(n_out)), hf, ax);
      }
      // final axis accumulates straight into the sum
      const size_t n_out = t.shape()[0] * static_cast<size_t>(hf);
      unfold_axis_add(up, t, axis_filter(bank, b.label[0]).samples(static_cast<int>(n_out)), hf, 0);
    }
    freq = std::move(up);
  }
  return ifft_real(std::move(freq), max_imag);
}

namespace {

// Half-point symmetric index: ..., v(1), v(0) | v(0..n-1) | v(n-1), v(n-2), ...
size_t reflect_index(long long t, size_t n) {
  const long long period = 2 * static_cast<long long>(n);
  long long m = t % period;
  if (m < 0) m += period;
  return static_cast<size_t>(m < static_cast<long long>(n) ? m : period - 1 - m);
}

}  // namespace

Tensor sym_extend(const Tensor& v, const std::vector<size_t>& target_shape, PadInfo* info) {
  const size_t d = v.ndim();
  if (target_shape.size() != d) throw ShapeError("sym_extend: dimension mismatch");
  std::vector<size_t> left(d);
  for (size_t ax = 0; ax < d; ++ax) {
    if (target_shape[ax] < v.shape()[ax]) throw ShapeError("sym_extend: target smaller than input");
    left[ax] = (target_shape[ax] - v.shape()[ax]) / 2;
  }
  if (info) {
    info->original_shape = v.shape();
    info->pad_left = left;
  }

  Tensor out(target_shape);
  const auto out_strides = out.strides();
  const auto in_strides = v.strides();
  std::vector<size_t> idx(d, 0);
  for (size_t lin = 0; lin < out.size(); ++lin) {
    size_t src = 0;
    for (size_t ax = 0; ax < d; ++ax) {
      src += reflect_index(static_cast<long long>(idx[ax]) - static_cast<long long>(left[ax]),
                           v.shape()[ax]) *
             in_strides[ax];
    }
    out[lin] = v[src];
    for (size_t ax = d; ax-- > 0;) {
      if (++idx[ax] < target_shape[ax]) break;
      idx[ax] = 0;
    }
  }
  return out;
}

Tensor crop(const Tensor& v, const PadInfo& info) {
  const size_t d = v.ndim();
  if (info.original_shape.size() != d || info.pad_left.size() != d) {
    throw ShapeError("crop: inconsistent pad info");
  }
  for (size_t ax = 0; ax < d; ++ax) {
    if (info.pad_left[ax] + info.original_shape[ax] > v.shape()[ax]) {
      throw ShapeError("crop: region exceeds tensor");
    }
  }
  Tensor out(info.original_shape);
  const auto in_strides = v.strides();
  std::vector<size_t> idx(d, 0);
  for (size_t lin = 0; lin < out.size(); ++lin) {
    size_t src = 0;
    for (size_t ax = 0; ax < d; ++ax) src += (idx[ax] + info.pad_left[ax]) * in_strides[ax];
    out[lin] = v[src];
    for (size_t ax = d; ax-- > 0;) {
      if (++idx[ax] < info.original_shape[ax]) break;
      idx[ax] = 0;
    }
  }
  return out;
}

std::vector<size_t> admissible_shape(const std::vector<size_t>& shape, BankKind kind, int J,
                                     size_t min_pad) {
  const size_t divisor = required_divisor(kind, J);
  std::vector<size_t> out(shape.size());
  for (size_t ax = 0; ax < shape.size(); ++ax) {
    const size_t needed = shape[ax] + 2 * min_pad;
    out[ax] = ((needed + divisor - 1) / divisor) * divisor;
  }
  return out;
}

}  // namespace tpctf
