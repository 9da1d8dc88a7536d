#pragma once

#include <algorithm>
#include <string>

#include "locrep/exact/poly.hpp"

namespace locrep {

// A point of P^1(Q).
class ProjRat {
 public:
  ProjRat(const Rat& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ProjRat(long v) : value_(v) {}        // NOLINT(google-explicit-constructor)
  static ProjRat infinity() {
    ProjRat r(0);
    r.inf_ = true;
    return r;
  }
  bool is_infinity() const { return inf_; }
  const Rat& value() const;
  std::string to_string() const { return inf_ ? "inf" : value_.get_str(); }
  friend bool operator==(const ProjRat& a, const ProjRat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

 private:
  Rat value_;
  bool inf_ = false;
};

// f = num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT
  static RatFunc make(const Poly& g, const Poly& h);
  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const { return std::max({num_.degree(), den_.degree(), 0}); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  ProjRat operator()(const ProjRat& x) const;
  // (this o inner)(x) = this(inner(x))
  RatFunc compose(const RatFunc& inner) const;

  // num - t0 * den, the polynomial whose roots are the finite preimages of t0.
  Poly fiber(const Rat& t0) const { return num_ - den_ * t0; }

  RatFunc operator-() const { return make(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(unsigned e) const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Reparseable text form.
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

// lambda o f o mu for degree-1 lambda, mu.
RatFunc moebius_conjugate(const RatFunc& f, const RatFunc& lambda, const RatFunc& mu);
// (aX + b)/(cX + d) -> (dX - b)/(-cX + a)
RatFunc moebius_inverse(const RatFunc& m);

// (g, h) = s * (num, den) for the rational s > 0 making all coefficients
// integers with overall content 1.
std::pair<Poly, Poly> integer_pair(const RatFunc& f);

}  // namespace locrep
