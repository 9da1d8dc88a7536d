#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "locrep/exact/arith.hpp"

namespace locrep {

// Dense univariate polynomial over Q, coefficients lowest degree first.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int k);
  static Poly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator[](int i) const;
  const Rat& lc() const;

  Rat operator()(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly compose(const Poly& inner) const;
  Poly reversal(int n) const;  // X^n * P(1/X)
  Poly taylor_shift(const Rat& r) const;  // P(X + r)

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const;

  // Renders with '*' and '^' so that the expression parser reads it back.
  std::string to_string(char var = 'X') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // quotient
Poly operator%(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& a);
// a = lc * prod_i parts[i]^(i+1) with monic, pairwise coprime parts.
std::vector<Poly> squarefree_decomposition(const Poly& a);
// Multiplicities of the roots over an algebraic closure, descending.
std::vector<int> root_multiplicities(const Poly& a);

Rat resultant(const Poly& a, const Poly& b);
// (-1)^(n(n-1)/2) * Res(a, a') / lc(a); linear polynomials have disc 1.
Rat discriminant(const Poly& a);

// Integer coefficients with content 1 and positive leading coefficient.
Poly primitive_part(const Poly& a);
std::vector<Int> integer_coefficients(const Poly& a);  // requires integral input
Poly from_integers(const std::vector<Int>& coeffs);

std::vector<Rat> rational_roots(const Poly& a);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace locrep
