#include "tpctf/rational.hpp"

#include <numeric>

namespace tpctf {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw OverflowError(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

void Rational::normalize() {
  if (den_ == 0) throw OverflowError("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "+");
  r.den_ = narrow(d, "+");
  r.normalize();
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  Rational neg;
  neg.num_ = -o.num_;
  neg.den_ = o.den_;
  return *this + neg;
}

Rational Rational::operator*(const Rational& o) const {
  i128 n = i128(num_) * o.num_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "*");
  r.den_ = narrow(d, "*");
  r.normalize();
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw OverflowError("rational: division by zero");
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::pow_int(std::int64_t base, int exp) {
  if (exp < 0) throw OverflowError("rational: negative exponent");
  i128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    narrow(acc, "pow");
  }
  return Rational(narrow(acc, "pow"));
}

}  // namespace tpctf
