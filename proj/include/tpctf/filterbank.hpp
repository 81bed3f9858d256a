#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tpctf/bump.hpp"
#include "tpctf/params.hpp"

namespace tpctf {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

struct FilterLabel {
  enum class Kind { A, AP, AN, BP, BN };
  Kind kind = Kind::A;
  int index = 0;  // band index ell for BP/BN, 0 otherwise

  static FilterLabel a() { return {Kind::A, 0}; }
  static FilterLabel ap() { return {Kind::AP, 0}; }
  static FilterLabel an() { return {Kind::AN, 0}; }
  static FilterLabel bp(int ell) { return {Kind::BP, ell}; }
  static FilterLabel bn(int ell) { return {Kind::BN, ell}; }

  bool operator==(const FilterLabel&) const = default;
  auto operator<=>(const FilterLabel&) const = default;

  /// AP<->AN, BP(l)<->BN(l); A maps to itself.
  FilterLabel mirrored() const;
  bool is_auxiliary() const { return kind == Kind::AP || kind == Kind::AN; }
};

std::string to_string(const FilterLabel& l);
FilterLabel filter_label_from_name(const std::string& name);

/// Grid point k of an n-point frequency grid, wrapped to [-pi, pi).
/// k/n is computed first so the value is bit-identical across grid doublings.
inline double grid_xi(int n, long long k) {
  double r = static_cast<double>(k) / static_cast<double>(n);
  return (r < 0.5) ? 2.0 * M_PI * r : 2.0 * M_PI * (r - 1.0);
}

// One filter of a bank.  Direct filters own a bump segment; mirrored filters
// (AN, BN) reference their source and take conjugated, index-reflected
// samples from it, so the mirror symmetry holds bit-exactly.
class SampledFilter {
 public:
  SampledFilter(FilterLabel label, BumpSegment seg, int sampling_factor, double gain = 1.0);
  SampledFilter(FilterLabel label, std::shared_ptr<const SampledFilter> source,
                int sampling_factor, double gain = 1.0);

  FilterLabel label() const { return label_; }
  int sampling_factor() const { return factor_; }
  double gain() const { return gain_; }
  bool mirrored() const { return source_ != nullptr; }

  /// Closed-form value of the 2*pi-periodic symbol (real-valued).
  double symbol(double xi) const;

  /// Frequency samples on the n-point grid (n even, n >= 8); cached per n.
  const cvec& samples(int n) const;

 private:
  FilterLabel label_;
  std::optional<BumpSegment> seg_;
  std::shared_ptr<const SampledFilter> source_;
  int factor_;
  double gain_;

  mutable std::map<int, cvec> cache_;
  mutable std::mutex cache_mutex_;
};

class FilterBank1D {
 public:
  FilterBank1D(BankKind kind, FrameletParams params,
               std::vector<std::shared_ptr<const SampledFilter>> filters,
               std::shared_ptr<const SampledFilter> lowpass);

  BankKind kind() const { return kind_; }
  const FrameletParams& params() const { return params_; }
  int s() const { return params_.s; }

  const std::vector<std::shared_ptr<const SampledFilter>>& filters() const { return filters_; }
  const SampledFilter& lowpass() const { return *lowpass_; }
  const SampledFilter& filter(FilterLabel label) const;
  bool has(FilterLabel label) const;

  /// Per-axis high-pass labels for the tensor-product transform.
  std::vector<FilterLabel> high_labels() const;

 private:
  BankKind kind_;
  FrameletParams params_;
  std::vector<std::shared_ptr<const SampledFilter>> filters_;
  std::shared_ptr<const SampledFilter> lowpass_;
};

/// Build a validated bank.  `gains` rescales individual filters (testing and
/// the CLI's --perturb hook); mirrored filters inherit their source's gain.
FilterBank1D build_bank(BankKind kind, const FrameletParams& params,
                        const std::map<FilterLabel, double>& gains = {});

/// Same construction without the parameter validation gate (bump invariants
/// still apply).  Used to probe deliberately broken parameter sets.
FilterBank1D build_bank_unchecked(BankKind kind, const FrameletParams& params,
                                  const std::map<FilterLabel, double>& gains = {});

/// Grid samples of a filter symbol; thin wrapper over SampledFilter::samples.
const cvec& sample_filter(const SampledFilter& f, int n);

/// (1/n) * sum_k |f^(xi_k)|^2; converges to the squared l2 norm of the filter.
double filter_l2_norm_sq(const SampledFilter& f, int n);

/// Samples of the level-j cascade filter on an n-point grid: the product of
/// low-pass symbols at dilated arguments times the chosen filter's symbol at
/// the 2^{j-1}-dilated argument (the filter itself when `which` is the
/// low-pass label).  Dilated arguments are reduced modulo the grid exactly.
cvec multilevel_filter(const FilterBank1D& bank, FilterLabel which, int j, int n);

}  // namespace tpctf
