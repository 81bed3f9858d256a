#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tpctf/error.hpp"

namespace tpctf {

enum class BankKind { CtfOdd, CtfEven, Ctf6Down };

std::string to_string(BankKind kind);

// Breakpoints and transition half-widths of a complex tight framelet bank.
//   c[0..s]   : 0 < c_1 < ... < c_{s+1} = pi   (c[i] stores c_{i+1})
//   eps[0..s+1]: eps_0 ... eps_{s+1}, all positive
// eps_0 shapes only the auxiliary filters a^p / a^n; banks without them carry
// it as an unused (but still positive) entry.
struct FrameletParams {
  int s = 0;
  std::vector<double> c;
  std::vector<double> eps;

  FrameletParams(int s_, std::vector<double> c_, std::vector<double> eps_);

  double c_at(int ell) const { return c.at(static_cast<size_t>(ell) - 1); }  // c_ell, ell = 1..s+1
  double eps_at(int ell) const { return eps.at(static_cast<size_t>(ell)); }  // eps_ell, ell = 0..s+1
};

struct ValidationItem {
  std::string name;  // the inequality, spelled out
  double slack;      // >= 0 means satisfied
  bool ok;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok = true;

  void add(const std::string& name, double slack) {
    bool pass = slack >= 0.0;
    items.push_back({name, slack, pass});
    ok = ok && pass;
  }
  std::string describe_failures() const;
};

/// Conditions for the mixed-factor bank (s = 2): the three chained
/// inequalities plus the two frequency-separation inequalities.
ValidationReport validate_ctf6down(const FrameletParams& p);

/// Conditions for the uniform dyadic banks (odd: no auxiliary pair;
/// even: auxiliary pair present, so eps_0 enters).
ValidationReport validate_uniform(const FrameletParams& p, bool with_auxiliary);

ValidationReport validate_for(BankKind kind, const FrameletParams& p);

// Parameter sets used throughout for the three named banks.
FrameletParams ctf6down_parameters();
FrameletParams ctf3_parameters();
FrameletParams ctf6_parameters();

FrameletParams default_parameters(BankKind kind);
BankKind bank_kind_from_name(const std::string& name);  // "ctf3" | "ctf6" | "ctf6down"

}  // namespace tpctf
