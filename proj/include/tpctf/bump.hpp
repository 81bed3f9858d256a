#pragma once

#include <cmath>

#include "tpctf/error.hpp"

namespace tpctf {

// One cosine-flanked plateau on [cl - eps_l, cr + eps_r].  The value rises
// from 0 to 1 across (cl - eps_l, cl + eps_l), stays 1 on the plateau
// [cl + eps_l, cr - eps_r], and falls back to 0 across (cr - eps_r, cr + eps_r).
// Adjacent bumps sharing a breakpoint and its half-width tile the line:
// their squares sum to one across the shared transition.
struct BumpSegment {
  double cl = 0.0;
  double cr = 0.0;
  double eps_l = 0.0;
  double eps_r = 0.0;

  BumpSegment() = default;
  BumpSegment(double cl_, double cr_, double eps_l_, double eps_r_)
      : cl(cl_), cr(cr_), eps_l(eps_l_), eps_r(eps_r_) {
    if (!(eps_l > 0.0) || !(eps_r > 0.0)) {
      throw ConstructionError("bump: transition half-widths must be positive");
    }
    if (eps_l + eps_r > cr - cl) {
      throw ConstructionError("bump: empty plateau (eps_l + eps_r > cr - cl)");
    }
  }

  double support_left() const { return cl - eps_l; }
  double support_right() const { return cr + eps_r; }
};

/// Pointwise value of the bump; continuous, in [0, 1], exact 0 outside support.
inline double bump_eval(const BumpSegment& s, double xi) {
  if (xi <= s.cl - s.eps_l || xi >= s.cr + s.eps_r) return 0.0;
  if (xi < s.cl + s.eps_l) {
    return std::cos(M_PI * (s.cl + s.eps_l - xi) / (4.0 * s.eps_l));
  }
  if (xi <= s.cr - s.eps_r) return 1.0;
  return std::cos(M_PI * (xi - s.cr + s.eps_r) / (4.0 * s.eps_r));
}

// 2*pi-periodization of the bump, for symbols whose support sticks out of the
// basic interval [-pi, pi) (the high band ending at pi wraps its falling
// transition to the start of the interval).  Supports are narrower than 2*pi,
// so at most one shifted copy is nonzero at any xi.
inline double bump_eval_periodic(const BumpSegment& s, double xi) {
  double v = bump_eval(s, xi);
  if (v == 0.0) v = bump_eval(s, xi + 2.0 * M_PI);
  if (v == 0.0) v = bump_eval(s, xi - 2.0 * M_PI);
  return v;
}

}  // namespace tpctf
