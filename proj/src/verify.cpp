#include "tpctf/verify.hpp"

#include <algorithm>
#include <cmath>

namespace tpctf {

double PrReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : conditions) m = std::max(m, c.residual);
  return m;
}

namespace {

double residual_partition(const std::vector<const SampledFilter*>& members, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (const SampledFilter* f : members) acc += std::norm(f->samples(n)[static_cast<size_t>(k)]);
    worst = std::max(worst, std::abs(acc - 1.0));
  }
  return worst;
}

double residual_offset(const std::vector<const SampledFilter*>& members, int n, int shift) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (const SampledFilter* f : members) {
      const cvec& s = f->samples(n);
      acc += s[static_cast<size_t>(k)] * std::conj(s[static_cast<size_t>((k + shift) % n)]);
    }
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

}  // namespace

PrReport check_pr(const FilterBank1D& bank, int n, double tolerance) {
  if (n < 8 || n % 4 != 0) throw GridError("check_pr: grid size must be divisible by 4");
  PrReport r;
  r.tolerance = tolerance;
  auto add = [&](const std::string& name, double residual) {
    r.conditions.push_back({name, residual});
    r.pass = r.pass && residual < tolerance;
  };

  if (bank.kind() == BankKind::Ctf6Down) {
    const SampledFilter* a = &bank.lowpass();
    std::vector<const SampledFilter*> highs;
    for (int ell = 1; ell <= bank.s(); ++ell) highs.push_back(&bank.filter(FilterLabel::bp(ell)));
    for (int ell = 1; ell <= bank.s(); ++ell) highs.push_back(&bank.filter(FilterLabel::bn(ell)));

    std::vector<const SampledFilter*> bank_low = highs;
    bank_low.insert(bank_low.begin(), a);
    add("mixed_partition", residual_partition(bank_low, n));
    add("mixed_offset_pi", residual_offset(bank_low, n, n / 2));
    add("mixed_offset_pi_half", residual_offset(highs, n, n / 4));
    add("mixed_offset_3pi_half", residual_offset(highs, n, 3 * n / 4));

    std::vector<const SampledFilter*> bank_aux = highs;
    bank_aux.insert(bank_aux.begin(), &bank.filter(FilterLabel::an()));
    bank_aux.insert(bank_aux.begin(), &bank.filter(FilterLabel::ap()));
    add("aux_partition", residual_partition(bank_aux, n));
    add("aux_offset_pi_half", residual_offset(bank_aux, n, n / 4));
    add("aux_offset_pi", residual_offset(bank_aux, n, n / 2));
    add("aux_offset_3pi_half", residual_offset(bank_aux, n, 3 * n / 4));
    add("split_identity", split_identity_residual(bank, n));
  } else if (bank.kind() == BankKind::CtfEven) {
    std::vector<const SampledFilter*> members;
    for (const auto& f : bank.filters()) members.push_back(f.get());
    add("partition", residual_partition(members, n));
    add("offset_pi", residual_offset(members, n, n / 2));
    add("split_identity", split_identity_residual(bank, n));
  } else {
    std::vector<const SampledFilter*> members;
    for (const auto& f : bank.filters()) members.push_back(f.get());
    add("partition", residual_partition(members, n));
    add("offset_pi", residual_offset(members, n, n / 2));
  }
  return r;
}

double split_identity_residual(const FilterBank1D& bank, int n) {
  const cvec& a = bank.lowpass().samples(n);
  const cvec& ap = bank.filter(FilterLabel::ap()).samples(n);
  const cvec& an = bank.filter(FilterLabel::an()).samples(n);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const size_t i = static_cast<size_t>(k);
    worst = std::max(worst, std::abs(std::norm(ap[i]) + std::norm(an[i]) - std::norm(a[i])));
  }
  return worst;
}

double check_energy(const FilterBank1D& bank, const Tensor& v, int J) {
  double input = 0.0;
  for (size_t i = 0; i < v.size(); ++i) input += v[i] * v[i];
  if (input == 0.0) return 0.0;
  CoeffPyramid p = analyze(v, bank, J);
  return std::abs(input - p.energy()) / input;
}

std::vector<SeparationEntry> check_frequency_separation(const FilterBank1D& bank, int j_min,
                                                        int j_max, int n) {
  if (j_min < 1 || j_max < j_min) throw GridError("separation: bad level range");
  std::vector<SeparationEntry> out;
  for (int j = j_min; j <= j_max; ++j) {
    for (int ell = 1; ell <= bank.s(); ++ell) {
      cvec bp = multilevel_filter(bank, FilterLabel::bp(ell), j, n);
      cvec bn = multilevel_filter(bank, FilterLabel::bn(ell), j, n);
      SeparationEntry e;
      e.ell = ell;
      e.j = j;
      e.max_bp_on_negative = 0.0;
      e.max_bn_on_positive = 0.0;
      for (int k = 0; k < n; ++k) {
        const double xi = grid_xi(n, k);
        const size_t i = static_cast<size_t>(k);
        // xi = -pi stands for both ends of the interval
        if (xi <= 0.0) e.max_bp_on_negative = std::max(e.max_bp_on_negative, std::abs(bp[i]));
        if (xi >= 0.0 || k == n / 2) {
          e.max_bn_on_positive = std::max(e.max_bn_on_positive, std::abs(bn[i]));
        }
      }
      out.push_back(e);
    }
  }
  return out;
}

namespace {

cvec naive_idft(const cvec& symbol) {
  const size_t n = symbol.size();
  cvec out(n);
  for (size_t m = 0; m < n; ++m) {
    cplx acc = 0.0;
    for (size_t k = 0; k < n; ++k) {
      const double ang = 2.0 * M_PI * static_cast<double>(k) * static_cast<double>(m) /
                         static_cast<double>(n);
      acc += symbol[k] * cplx(std::cos(ang), std::sin(ang));
    }
    out[m] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace

double das_equivalence(const FilterBank1D& bank, const std::vector<double>& v, int J) {
  const int n = static_cast<int>(v.size());
  if (n > 128) throw GridError("das_equivalence: brute force is capped at n = 128");
  CoeffPyramid p = analyze(Tensor({static_cast<size_t>(n)}, std::vector<double>(v)), bank, J);

  double worst = 0.0;
  if (J == 0) {
    for (int m = 0; m < n; ++m) {
      worst = std::max(worst, std::abs(p.low[static_cast<size_t>(m)] - v[static_cast<size_t>(m)]));
    }
    return worst;
  }

  auto inner_products = [&](const cvec& spatial, double amp, int lattice) {
    cvec out(static_cast<size_t>(n / lattice));
    for (int k = 0; k < n / lattice; ++k) {
      cplx acc = 0.0;
      for (int m = 0; m < n; ++m) {
        const int shifted = ((m - lattice * k) % n + n) % n;
        acc += v[static_cast<size_t>(m)] * std::conj(amp * spatial[static_cast<size_t>(shifted)]);
      }
      out[static_cast<size_t>(k)] = acc;
    }
    return out;
  };

  {
    cvec a_j = naive_idft(multilevel_filter(bank, FilterLabel::a(), J, n));
    const int lattice = 1 << J;
    cvec ip = inner_products(a_j, std::pow(2.0, J / 2.0), lattice);
    for (size_t k = 0; k < ip.size(); ++k) {
      worst = std::max(worst, std::abs(ip[k] - cplx(p.low[k])));
    }
  }

  const int hf = high_factor(bank.kind());
  for (int j = 1; j <= J; ++j) {
    for (const Band& b : p.levels[static_cast<size_t>(j - 1)].bands) {
      cvec filt = naive_idft(multilevel_filter(bank, b.label[0], j, n));
      const int lattice = (1 << (j - 1)) * hf;
      const double amp = std::pow(2.0, (j - 1) / 2.0) * std::sqrt(static_cast<double>(hf));
      cvec ip = inner_products(filt, amp, lattice);
      for (size_t k = 0; k < ip.size(); ++k) {
        worst = std::max(worst, std::abs(ip[k] - b.coeffs[k]));
      }
    }
  }
  return worst;
}

Rational redundancy_rate(BankKind kind, int s, int d, int J) {
  if (d < 1) throw ShapeError("redundancy: dimension must be >= 1");
  if (s < 1) throw ShapeError("redundancy: s must be >= 1");
  const bool mixed = kind == BankKind::Ctf6Down;
  const std::int64_t m = kind == BankKind::CtfOdd ? 2 * s + 1 : 2 * s + 2;

  Rational high = Rational::pow_int(m, d);
  high = high - (kind == BankKind::CtfOdd ? Rational(1) : Rational::pow_int(2, d));

  const Rational half = Rational(1) / Rational::pow_int(2, d);
  if (J < 0) {
    Rational denom = mixed ? Rational::pow_int(4, d) - Rational::pow_int(2, d)
                           : Rational::pow_int(2, d) - Rational(1);
    return high / denom;
  }
  Rational total(0);
  Rational low_frac(1);
  for (int j = 1; j <= J; ++j) {
    low_frac = low_frac * half;                                    // 2^{-dj}
    Rational band_frac = mixed ? low_frac * half : low_frac;       // extra /2 per axis
    total = total + high * band_frac;
  }
  return total + low_frac;
}

Rational measured_redundancy(const CoeffPyramid& p) {
  const std::int64_t input = static_cast<std::int64_t>(Tensor::count(p.input_shape));
  return Rational(static_cast<std::int64_t>(p.counted_scalars()), input);
}

}  // namespace tpctf
