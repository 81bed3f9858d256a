#include "tpctf/filterbank.hpp"

#include <algorithm>

namespace tpctf {

FilterLabel FilterLabel::mirrored() const {
  switch (kind) {
    case Kind::A: return *this;
    case Kind::AP: return an();
    case Kind::AN: return ap();
    case Kind::BP: return bn(index);
    case Kind::BN: return bp(index);
  }
  return *this;
}

std::string to_string(const FilterLabel& l) {
  switch (l.kind) {
    case FilterLabel::Kind::A: return "a";
    case FilterLabel::Kind::AP: return "ap";
    case FilterLabel::Kind::AN: return "an";
    case FilterLabel::Kind::BP: return "bp" + std::to_string(l.index);
    case FilterLabel::Kind::BN: return "bn" + std::to_string(l.index);
  }
  return "?";
}

FilterLabel filter_label_from_name(const std::string& name) {
  if (name == "a") return FilterLabel::a();
  if (name == "ap") return FilterLabel::ap();
  if (name == "an") return FilterLabel::an();
  if (name.size() > 2 && (name.rfind("bp", 0) == 0 || name.rfind("bn", 0) == 0)) {
    int ell = std::stoi(name.substr(2));
    return name[1] == 'p' ? FilterLabel::bp(ell) : FilterLabel::bn(ell);
  }
  throw ConstructionError("unknown filter label: " + name);
}

SampledFilter::SampledFilter(FilterLabel label, BumpSegment seg, int sampling_factor, double gain)
    : label_(label), seg_(seg), factor_(sampling_factor), gain_(gain) {}

SampledFilter::SampledFilter(FilterLabel label, std::shared_ptr<const SampledFilter> source,
                             int sampling_factor, double gain)
    : label_(label), source_(std::move(source)), factor_(sampling_factor), gain_(gain) {}

double SampledFilter::symbol(double xi) const {
  if (source_) {
    // u^n(xi) = conj(u^p(-xi)); symbols are real-valued, so conjugation is a no-op.
    return gain_ * source_->symbol(-xi);
  }
  return gain_ * bump_eval_periodic(*seg_, xi);
}

const cvec& SampledFilter::samples(int n) const {
  if (n < 2 || n % 2 != 0) throw GridError("samples: grid size must be even and >= 2");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  cvec out(static_cast<size_t>(n));
  if (source_) {
    // Index reflection k -> (n-k) mod n plus conjugation of the source samples.
    const cvec& src = source_->samples(n);
    for (int k = 0; k < n; ++k) {
      out[static_cast<size_t>(k)] = gain_ * std::conj(src[static_cast<size_t>((n - k) % n)]);
    }
  } else {
    for (int k = 0; k < n; ++k) {
      out[static_cast<size_t>(k)] = gain_ * bump_eval_periodic(*seg_, grid_xi(n, k));
    }
  }
  return cache_.emplace(n, std::move(out)).first->second;
}

FilterBank1D::FilterBank1D(BankKind kind, FrameletParams params,
                           std::vector<std::shared_ptr<const SampledFilter>> filters,
                           std::shared_ptr<const SampledFilter> lowpass)
    : kind_(kind), params_(std::move(params)), filters_(std::move(filters)),
      lowpass_(std::move(lowpass)) {}

const SampledFilter& FilterBank1D::filter(FilterLabel label) const {
  for (const auto& f : filters_) {
    if (f->label() == label) return *f;
  }
  if (lowpass_ && lowpass_->label() == label) return *lowpass_;
  throw ConstructionError("bank has no filter " + to_string(label));
}

bool FilterBank1D::has(FilterLabel label) const {
  for (const auto& f : filters_) {
    if (f->label() == label) return true;
  }
  return lowpass_ && lowpass_->label() == label;
}

std::vector<FilterLabel> FilterBank1D::high_labels() const {
  std::vector<FilterLabel> out;
  if (kind_ == BankKind::CtfOdd) {
    out.push_back(FilterLabel::a());
  } else {
    out.push_back(FilterLabel::ap());
    out.push_back(FilterLabel::an());
  }
  for (int ell = 1; ell <= params_.s; ++ell) out.push_back(FilterLabel::bp(ell));
  for (int ell = 1; ell <= params_.s; ++ell) out.push_back(FilterLabel::bn(ell));
  return out;
}

namespace {

double gain_for(const std::map<FilterLabel, double>& gains, FilterLabel l) {
  auto it = gains.find(l);
  return it == gains.end() ? 1.0 : it->second;
}

FilterBank1D assemble(BankKind kind, const FrameletParams& p,
                      const std::map<FilterLabel, double>& gains) {
  const double c1 = p.c_at(1);
  const double e0 = p.eps_at(0), e1 = p.eps_at(1);

  auto lowpass = std::make_shared<const SampledFilter>(
      FilterLabel::a(), BumpSegment(-c1, c1, e1, e1), 2,
      gain_for(gains, FilterLabel::a()));

  const int high_factor = kind == BankKind::Ctf6Down ? 4 : 2;

  std::vector<std::shared_ptr<const SampledFilter>> filters;
  if (kind == BankKind::Ctf6Down || kind == BankKind::CtfOdd) {
    filters.push_back(lowpass);
  }
  if (kind != BankKind::CtfOdd) {
    auto ap = std::make_shared<const SampledFilter>(
        FilterLabel::ap(), BumpSegment(0.0, c1, e0, e1), high_factor,
        gain_for(gains, FilterLabel::ap()));
    filters.push_back(ap);
    filters.push_back(std::make_shared<const SampledFilter>(
        FilterLabel::an(), ap, high_factor, gain_for(gains, FilterLabel::an())));
  }
  std::vector<std::shared_ptr<const SampledFilter>> bps;
  for (int ell = 1; ell <= p.s; ++ell) {
    auto bp = std::make_shared<const SampledFilter>(
        FilterLabel::bp(ell),
        BumpSegment(p.c_at(ell), p.c_at(ell + 1), p.eps_at(ell), p.eps_at(ell + 1)),
        high_factor, gain_for(gains, FilterLabel::bp(ell)));
    filters.push_back(bp);
    bps.push_back(bp);
  }
  for (int ell = 1; ell <= p.s; ++ell) {
    filters.push_back(std::make_shared<const SampledFilter>(
        FilterLabel::bn(ell), bps[static_cast<size_t>(ell - 1)], high_factor,
        gain_for(gains, FilterLabel::bn(ell))));
  }
  return FilterBank1D(kind, p, std::move(filters), std::move(lowpass));
}

}  // namespace

FilterBank1D build_bank(BankKind kind, const FrameletParams& params,
                        const std::map<FilterLabel, double>& gains) {
  if (kind == BankKind::Ctf6Down && params.s != 2) {
    throw ShapeError("ctf6down requires s = 2");
  }
  ValidationReport report = validate_for(kind, params);
  if (!report.ok) {
    throw ValidationError("bank conditions violated: " + report.describe_failures());
  }
  return assemble(kind, params, gains);
}

FilterBank1D build_bank_unchecked(BankKind kind, const FrameletParams& params,
                                  const std::map<FilterLabel, double>& gains) {
  return assemble(kind, params, gains);
}

const cvec& sample_filter(const SampledFilter& f, int n) {
  if (n < 8) throw GridError("sample_filter: grid size must be even and >= 8");
  return f.samples(n);
}

double filter_l2_norm_sq(const SampledFilter& f, int n) {
  const cvec& s = f.samples(n);
  double acc = 0.0;
  for (const cplx& v : s) acc += std::norm(v);
  return acc / static_cast<double>(n);
}

cvec multilevel_filter(const FilterBank1D& bank, FilterLabel which, int j, int n) {
  if (j < 1) throw GridError("multilevel_filter: level must be >= 1");
  if (n < 8 || n % 2 != 0) throw GridError("multilevel_filter: grid size must be even and >= 8");
  const long long pow_top = 1LL << (j - 1);
  if (n % (1LL << j) != 0) {
    throw GridError("multilevel_filter: grid size must be divisible by 2^j");
  }
  const SampledFilter& low = bank.lowpass();
  const SampledFilter& top = bank.filter(which);
  if (j == 1) return top.samples(n);

  cvec out(static_cast<size_t>(n));
  for (long long k = 0; k < n; ++k) {
    // 2^t * xi_k reduced mod 2*pi is the grid point (2^t * k) mod n.
    double v = top.symbol(grid_xi(n, (k * pow_top) % n));
    for (long long t = 0; t < j - 1 && v != 0.0; ++t) {
      v *= low.symbol(grid_xi(n, (k << t) % n));
    }
    out[static_cast<size_t>(k)] = v;
  }
  return out;
}

}  // namespace tpctf
