#pragma once

// Brute-force references used by the tests.  Everything here is O(n^2) and
// deliberately independent of the FFT-based paths it checks.

#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline cvec naive_dft(const cvec& v) {
  const size_t n = v.size();
  cvec out(n);
  for (size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (size_t m = 0; m < n; ++m) {
      const double ang = -2.0 * M_PI * double(k) * double(m) / double(n);
      acc += v[m] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

inline cvec naive_dft_real(const std::vector<double>& v) {
  cvec c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return naive_dft(c);
}

inline cvec naive_idft(const cvec& v) {
  const size_t n = v.size();
  cvec out(n);
  for (size_t m = 0; m < n; ++m) {
    cplx acc = 0.0;
    for (size_t k = 0; k < n; ++k) {
      const double ang = 2.0 * M_PI * double(k) * double(m) / double(n);
      acc += v[k] * cplx(std::cos(ang), std::sin(ang));
    }
    out[m] = acc / double(n);
  }
  return out;
}

/// Analysis branch in space: factor^{1/2} * sum_m v(m) conj(u(m - factor*k)),
/// periodic in n.
inline cvec spatial_transition(const cvec& v, const cvec& u_spatial, int factor) {
  const int n = static_cast<int>(v.size());
  cvec out(static_cast<size_t>(n / factor));
  const double scale = std::sqrt(double(factor));
  for (int k = 0; k < n / factor; ++k) {
    cplx acc = 0.0;
    for (int m = 0; m < n; ++m) {
      const int i = ((m - factor * k) % n + n) % n;
      acc += v[static_cast<size_t>(m)] * std::conj(u_spatial[static_cast<size_t>(i)]);
    }
    out[static_cast<size_t>(k)] = scale * acc;
  }
  return out;
}

/// Synthesis branch in space: factor^{1/2} * sum_k w(k) u(m - factor*k).
inline cvec spatial_subdivision(const cvec& w, const cvec& u_spatial, int factor) {
  const int n = static_cast<int>(u_spatial.size());
  cvec out(static_cast<size_t>(n));
  const double scale = std::sqrt(double(factor));
  for (int m = 0; m < n; ++m) {
    cplx acc = 0.0;
    for (int k = 0; k < n / factor; ++k) {
      const int i = ((m - factor * k) % n + n) % n;
      acc += w[static_cast<size_t>(k)] * u_spatial[static_cast<size_t>(i)];
    }
    out[static_cast<size_t>(m)] = scale * acc;
  }
  return out;
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace oracles
