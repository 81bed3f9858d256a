#pragma once

#include <cstdint>
#include <string>

#include "tpctf/error.hpp"

namespace tpctf {

/// Exact fraction with 64-bit reduced terms and checked 128-bit intermediates.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Rational& o) const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;  // "26/7", integers without the denominator

  /// base^exp with overflow checking.
  static Rational pow_int(std::int64_t base, int exp);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  void normalize();
};

}  // namespace tpctf
