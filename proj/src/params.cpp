#include "tpctf/params.hpp"

#include <sstream>

namespace tpctf {

std::string to_string(BankKind kind) {
  switch (kind) {
    case BankKind::CtfOdd: return "ctf_odd";
    case BankKind::CtfEven: return "ctf_even";
    case BankKind::Ctf6Down: return "ctf6down";
  }
  return "?";
}

FrameletParams::FrameletParams(int s_, std::vector<double> c_, std::vector<double> eps_)
    : s(s_), c(std::move(c_)), eps(std::move(eps_)) {
  if (s < 1) throw ConstructionError("params: s must be >= 1");
  if (c.size() != static_cast<size_t>(s) + 1) {
    throw ConstructionError("params: expected s+1 breakpoints c_1..c_{s+1}");
  }
  if (eps.size() != static_cast<size_t>(s) + 2) {
    throw ConstructionError("params: expected s+2 widths eps_0..eps_{s+1}");
  }
  double prev = 0.0;
  for (double ci : c) {
    if (!(ci > prev)) throw ConstructionError("params: breakpoints must satisfy 0 < c_1 < ... < c_{s+1}");
    prev = ci;
  }
  if (std::abs(c.back() - M_PI) > 1e-12) {
    throw ConstructionError("params: c_{s+1} must equal pi");
  }
  c.back() = M_PI;
  for (double e : eps) {
    if (!(e > 0.0)) throw ConstructionError("params: all eps must be positive");
  }
}

std::string ValidationReport::describe_failures() const {
  std::ostringstream os;
  for (const auto& it : items) {
    if (!it.ok) {
      if (os.tellp() > 0) os << "; ";
      os << it.name << " (slack " << it.slack << ")";
    }
  }
  return os.str();
}

ValidationReport validate_ctf6down(const FrameletParams& p) {
  if (p.s != 2) throw ShapeError("validate_ctf6down: requires s = 2");
  const double c1 = p.c_at(1), c2 = p.c_at(2);
  const double e0 = p.eps_at(0), e1 = p.eps_at(1), e2 = p.eps_at(2), e3 = p.eps_at(3);
  const double half_pi = M_PI / 2.0;

  ValidationReport r;
  r.add("eps0+eps1 <= c1", c1 - (e0 + e1));
  r.add("c1 <= pi/2 - eps0 - eps1", (half_pi - e0 - e1) - c1);
  r.add("pi/2 + eps2 + eps3 <= c2", c2 - (half_pi + e2 + e3));
  r.add("c2 <= pi - eps2 - eps3", (M_PI - e2 - e3) - c2);
  r.add("eps1+eps2 <= c2 - c1", (c2 - c1) - (e1 + e2));
  r.add("c2 - c1 <= pi/2 - eps1 - eps2", (half_pi - e1 - e2) - (c2 - c1));
  r.add("c2/2 + eps2/2 + c1 + eps1 <= pi", M_PI - (c2 / 2.0 + e2 / 2.0 + c1 + e1));
  r.add("c1 + eps1 + eps3/2 <= pi/2", half_pi - (c1 + e1 + e3 / 2.0));
  return r;
}

ValidationReport validate_uniform(const FrameletParams& p, bool with_auxiliary) {
  const double c1 = p.c_at(1);
  const double e1 = p.eps_at(1);
  ValidationReport r;
  if (with_auxiliary) {
    r.add("eps0+eps1 <= c1", c1 - (p.eps_at(0) + e1));
  } else {
    r.add("eps1 <= c1", c1 - e1);
  }
  r.add("c1 <= pi/2 - eps1", (M_PI / 2.0 - e1) - c1);
  for (int ell = 1; ell <= p.s; ++ell) {
    const double gap = p.c_at(ell + 1) - p.c_at(ell);
    const double ee = p.eps_at(ell) + p.eps_at(ell + 1);
    r.add("eps" + std::to_string(ell) + "+eps" + std::to_string(ell + 1) + " <= c" +
              std::to_string(ell + 1) + " - c" + std::to_string(ell),
          gap - ee);
    r.add("c" + std::to_string(ell + 1) + " - c" + std::to_string(ell) + " <= pi - eps" +
              std::to_string(ell) + " - eps" + std::to_string(ell + 1),
          (M_PI - ee) - gap);
  }
  return r;
}

ValidationReport validate_for(BankKind kind, const FrameletParams& p) {
  switch (kind) {
    case BankKind::Ctf6Down: return validate_ctf6down(p);
    case BankKind::CtfEven: return validate_uniform(p, true);
    case BankKind::CtfOdd: return validate_uniform(p, false);
  }
  throw ConstructionError("unknown bank kind");
}

FrameletParams ctf6down_parameters() {
  return FrameletParams(2, {M_PI / 2.0 - 0.425, 2.0, M_PI}, {0.125, 0.3, 0.35, 0.0778});
}

FrameletParams ctf3_parameters() {
  // eps_0 is unused by the odd bank; any positive value keeping
  // eps0+eps1 <= c1 does.
  return FrameletParams(1, {33.0 / 32.0, M_PI}, {1.0 / 32.0, 69.0 / 128.0, 51.0 / 512.0});
}

FrameletParams ctf6_parameters() {
  return FrameletParams(2, {119.0 / 128.0, M_PI / 2.0 + 119.0 / 256.0, M_PI},
                        {35.0 / 128.0, 81.0 / 128.0, 115.0 / 256.0, 115.0 / 256.0});
}

FrameletParams default_parameters(BankKind kind) {
  switch (kind) {
    case BankKind::CtfOdd: return ctf3_parameters();
    case BankKind::CtfEven: return ctf6_parameters();
    case BankKind::Ctf6Down: return ctf6down_parameters();
  }
  throw ConstructionError("unknown bank kind");
}

BankKind bank_kind_from_name(const std::string& name) {
  if (name == "ctf3") return BankKind::CtfOdd;
  if (name == "ctf6") return BankKind::CtfEven;
  if (name == "ctf6down") return BankKind::Ctf6Down;
  throw ConstructionError("unknown bank name: " + name);
}

}  // namespace tpctf
