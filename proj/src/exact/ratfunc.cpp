#include "locrep/exact/ratfunc.hpp"

#include "locrep/errors.hpp"

namespace locrep {

const Rat& ProjRat::value() const {
  if (inf_) throw DomainError("value of the point at infinity");
  return value_;
}

RatFunc RatFunc::make(const Poly& g, const Poly& h) {
  if (h.is_zero()) throw DomainError("zero denominator");
  RatFunc f;
  if (g.is_zero()) return f;
  Poly c = gcd(g, h);
  Poly n = g / c, d = h / c;
  Rat s = 1 / d.lc();
  f.num_ = n * s;
  f.den_ = d * s;
  return f;
}

ProjRat RatFunc::operator()(const ProjRat& x) const {
  if (x.is_infinity()) {
    const int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return ProjRat::infinity();
    if (dn < dd) return ProjRat(0);
    return ProjRat(num_.lc() / den_.lc());
  }
  Rat h = den_(x.value());
  if (h == 0) return ProjRat::infinity();
  return ProjRat(num_(x.value()) / h);
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
  // Homogenize: N(a/b) * b^n and D(a/b) * b^n with n = deg(this).
  const int n = degree();
  const Poly& a = inner.num_;
  const Poly& b = inner.den_;
  std::vector<Poly> apow{Poly::constant(1)}, bpow{Poly::constant(1)};
  for (int i = 1; i <= n; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  auto homog = [&](const Poly& p) {
    Poly acc;
    for (int i = 0; i <= p.degree(); ++i)
      if (p[i] != 0) acc += apow[i] * bpow[n - i] * p[i];
    return acc;
  };
  return make(homog(num_), homog(den_));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc::make(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero function");
  return RatFunc::make(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned e) const { return make(num_.pow(e), den_.pow(e)); }

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc moebius_conjugate(const RatFunc& f, const RatFunc& lambda, const RatFunc& mu) {
  if (lambda.degree() != 1 || mu.degree() != 1)
    throw DomainError("moebius transformations must have degree 1");
  return lambda.compose(f.compose(mu));
}

RatFunc moebius_inverse(const RatFunc& m) {
  if (m.degree() != 1) throw DomainError("moebius transformation must have degree 1");
  const Rat a = m.num()[1], b = m.num()[0], c = m.den()[1], d = m.den()[0];
  return RatFunc::make(Poly{-b, d}, Poly{a, -c});
}

std::pair<Poly, Poly> integer_pair(const RatFunc& f) {
  Int l = 1, g = 0;
  for (const Poly* p : {&f.num(), &f.den()})
    for (const Rat& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const Poly* p : {&f.num(), &f.den()})
    for (const Rat& c : p->coeffs()) {
      const Int v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  const Rat scale = Rat(l) / g;
  return {f.num() * scale, f.den() * scale};
}

}  // namespace locrep
