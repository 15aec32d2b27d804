#pragma once

// Exact scalars for root coordinates.  A Scalar is a + b*tau with rational
// a, b and tau^2 = tau + 1 (so tau = (1+sqrt 5)/2).  Crystallographic root
// systems only ever produce b = 0; H3 and H4 need the full ring.  There is
// no floating point anywhere: equality and sign are decided exactly.

#include <gmpxx.h>

#include <cassert>
#include <ostream>
#include <string>
#include <utility>

namespace invarr {

using Rat = mpq_class;

class Scalar {
 public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int v) : a_(v), b_(0) {}  // NOLINT: implicit by design
  Scalar(Rat v) : a_(std::move(v)), b_(0) {}
  Scalar(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar tau() { return Scalar(Rat(0), Rat(1)); }

  const Rat& rational_part() const { return a_; }
  const Rat& tau_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

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
  Scalar& operator*=(const Scalar& o) {
    // (a + b tau)(c + d tau) = (ac + bd) + (ad + bc + bd) tau
    Rat ac = a_ * o.a_, bd = b_ * o.b_;
    Rat t = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = ac + bd;
    b_ = std::move(t);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Field inverse: 1/(a + b tau) = (a + b - b tau) / (a^2 + ab - b^2).
  Scalar inverse() const {
    Rat norm = a_ * a_ + a_ * b_ - b_ * b_;
    assert(norm != 0 && "inverse of zero");
    return Scalar((a_ + b_) / norm, -b_ / norm);
  }

  // Sign of the real number a + b*(1+sqrt 5)/2, computed exactly.
  int sign() const {
    Rat p = 2 * a_ + b_;  // value equals (p + b sqrt 5)/2
    const Rat& q = b_;
    int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with 5 q^2; sqrt 5 is irrational so the
    // two never tie for q != 0.
    int cmp = cmp_abs_squares(p, q);
    return cmp > 0 ? sp : sq;
  }

  friend bool operator<(const Scalar& x, const Scalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  std::string str() const {
    if (b_ == 0) return a_.get_str();
    std::string out;
    if (a_ != 0) out += a_.get_str();
    if (b_ > 0 && a_ != 0) out += "+";
    if (b_ == -1)
      out += "-";
    else if (b_ != 1)
      out += b_.get_str() + "*";
    out += "tau";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

 private:
  static int cmp_abs_squares(const Rat& p, const Rat& q) {
    Rat lhs = p * p, rhs = 5 * q * q;
    return cmp(lhs, rhs);
  }

  Rat a_, b_;
};

}  // namespace invarr
