#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxkit {

// Exact scalar a + b*phi with a, b arbitrary-precision rationals and
// phi = (1+sqrt(5))/2 the golden ratio (phi^2 = phi + 1).  Plain rationals
// are the b = 0 case; mixed arithmetic stays in the same representation.
// No floating point anywhere: comparisons against zero are decided by the
// exact sign test below.
class Scalar {
 public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int v) : a_(v), b_(0) {}
  Scalar(long v) : a_(v), b_(0) {}
  Scalar(const mpq_class& a) : a_(a), b_(0) {}
  Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar phi() { return Scalar(mpq_class(0), mpq_class(1)); }
  // phi^-1 = phi - 1
  static Scalar inv_phi() { return Scalar(mpq_class(-1), mpq_class(1)); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& phi_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // True when the value lies in Z (not merely Z[phi]).
  bool is_integer() const {
    return b_ == 0 && a_.get_den() == 1;
  }
  mpz_class to_integer() const {
    if (!is_integer()) throw std::domain_error("Scalar: not an integer");
    return a_.get_num();
  }

  Scalar operator-() const { return Scalar(-a_, -b_); }

  Scalar& operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  // (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + b1 a2 + b1 b2) phi
  Scalar& operator*=(const Scalar& o) {
    mpq_class na = a_ * o.a_ + b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  // Galois conjugate sends phi to 1 - phi; the field norm
  // N(a + b phi) = a^2 + a b - b^2 is rational and nonzero off 0.
  Scalar galois_conjugate() const { return Scalar(a_ + b_, -b_); }
  Scalar inverse() const {
    mpq_class n = a_ * a_ + a_ * b_ - b_ * b_;
    if (n == 0) throw std::domain_error("Scalar: division by zero");
    return Scalar((a_ + b_) / n, -b_ / n);
  }

  // Sign of a + b phi, exactly.  Writing the value as (x + y sqrt(5))/2 with
  // x = 2a + b, y = b, the sign follows from the signs of x, y and the
  // comparison of x^2 with 5 y^2.
  int sign() const {
    if (b_ == 0) return sgn(a_);
    mpq_class x = 2 * a_ + b_;
    const mpq_class& y = b_;
    int sx = sgn(x), sy = sgn(y);
    if (sx >= 0 && sy > 0) return 1;
    if (sx <= 0 && sy < 0) return -1;
    // x and y have strictly opposite signs here; compare magnitudes.
    mpq_class x2 = x * x, y2 = 5 * y * y;
    if (x2 == y2) return 0;
    return (x2 > y2) ? sx : sy;
  }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) {
    return !(x == y);
  }
  friend bool operator<(const Scalar& x, const Scalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) {
    return !(y < x);
  }
  friend bool operator>=(const Scalar& x, const Scalar& y) {
    return !(x < y);
  }

  std::string str() const {
    if (is_rational()) return a_.get_str();
    std::string s = a_.get_str();
    s += (b_ >= 0) ? "+" : "-";
    s += mpq_class(abs(b_)).get_str();
    s += "*phi";
    return s;
  }

 private:
  static int sgn(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

  mpq_class a_, b_;
};

using Vec = std::vector<Scalar>;

inline Scalar dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Scalar s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("vec add: dimension mismatch");
  Vec r(x);
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

inline Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("vec sub: dimension mismatch");
  Vec r(x);
  for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  return r;
}

inline Vec operator-(const Vec& x) {
  Vec r(x);
  for (auto& c : r) c = -c;
  return r;
}

inline Vec operator*(const Scalar& s, const Vec& x) {
  Vec r(x);
  for (auto& c : r) c *= s;
  return r;
}

inline bool is_zero(const Vec& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

// Total lexicographic order on coordinate vectors; used for canonical
// root ordering and for exact coordinate -> index maps.
struct VecLess {
  bool operator()(const Vec& x, const Vec& y) const {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
      int s = (x[i] - y[i]).sign();
      if (s < 0) return true;
      if (s > 0) return false;
    }
    return x.size() < y.size();
  }
};

}  // namespace coxkit
