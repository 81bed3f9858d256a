#pragma once

#include "tpctf/rational.hpp"
#include "tpctf/transform.hpp"

namespace tpctf {

struct PrCondition {
  std::string name;
  double residual;
};

struct PrReport {
  std::vector<PrCondition> conditions;
  double tolerance = 1e-12;
  bool pass = true;

  double max_residual() const;
};

/// Grid check of the perfect-reconstruction identities: the partition of
/// unity plus every aliasing-offset condition the bank's sampling factors
/// admit.  For the mixed bank both filter-bank variants are checked (the
/// low-pass/high-pass bank and the all-downsample-by-4 bank) together with
/// the squared split of the low-pass into the auxiliary pair.
PrReport check_pr(const FilterBank1D& bank, int n, double tolerance = 1e-12);

/// max over the grid of | |a^p|^2 + |a^n|^2 - |a|^2 |.
double split_identity_residual(const FilterBank1D& bank, int n);

/// | ||v||^2 - pyramid energy | / ||v||^2 after a J-level transform.
double check_energy(const FilterBank1D& bank, const Tensor& v, int J);

struct SeparationEntry {
  int ell = 0;
  int j = 0;
  double max_bp_on_negative;  // max |b^p_{ell,j}| over grid points in [-pi, 0]
  double max_bn_on_positive;  // max |b^n_{ell,j}| over grid points in [0, pi]
};

/// Moduli of the cascade high-pass filters on the half-axis they are supposed
/// to vanish on, for j = j_min..j_max.
std::vector<SeparationEntry> check_frequency_separation(const FilterBank1D& bank, int j_min,
                                                        int j_max, int n);

/// One-dimensional brute-force cross-check: coefficients of analyze() against
/// direct inner products with the shifted cascade filters (built by naive
/// inverse DFT of the sampled cascade symbols).  n is capped at 128.
double das_equivalence(const FilterBank1D& bank, const std::vector<double>& v, int J);

/// Exact redundancy of the J-level d-dimensional transform; J < 0 means the
/// infinite-level limit.  Complex coefficients count as two reals, halved for
/// the mirrored-band pairing.
Rational redundancy_rate(BankKind kind, int s, int d, int J);

/// Same counting applied to an actual pyramid: stored scalars over input size.
Rational measured_redundancy(const CoeffPyramid& p);

}  // namespace tpctf
