#include "locrep/exact/algebraic.hpp"

#include <algorithm>

#include "locrep/errors.hpp"

namespace locrep {

ResidueRing::ResidueRing(Poly phi) : phi_(phi.monic()) {
  if (phi_.degree() < 1) throw DomainError("residue ring modulus must be nonconstant");
}

Poly ResidueRing::inv(const Poly& a0) const {
  Poly a = reduce(a0);
  if (a.is_zero()) throw DomainError("inverse of zero");
  // Extended Euclid on (phi, a), tracking the cofactor of a.
  Poly r0 = phi_, r1 = a, s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() > 0) throw Split{r0.monic()};
  return reduce(s0 * (1 / r0.lc()));
}

bool ResidueRing::is_zero(const Poly& a0) const {
  Poly a = reduce(a0);
  if (a.is_zero()) return true;
  Poly g = gcd(a, phi_);
  if (g.degree() > 0) throw Split{g};
  return false;
}

namespace {

void normalize(const ResidueRing& ring, RingPoly& f) {
  for (auto& c : f) c = ring.reduce(c);
  while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
}

RingPoly derivative(const ResidueRing& ring, const RingPoly& f) {
  RingPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rat(static_cast<long>(i)));
  normalize(ring, d);
  return d;
}

RingPoly remainder(const ResidueRing& ring, RingPoly a, const RingPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Poly inv = ring.inv(b.back());
  normalize(ring, a);
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    Poly coef = ring.mul(a.back(), inv);
    for (int j = 0; j <= db; ++j) a[shift + j] = ring.reduce(a[shift + j] - coef * b[j]);
    a.pop_back();
    normalize(ring, a);
  }
  return a;
}

RingPoly ring_gcd(const ResidueRing& ring, RingPoly a, RingPoly b) {
  normalize(ring, a);
  normalize(ring, b);
  while (!b.empty()) {
    RingPoly r = remainder(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

int ring_degree(const ResidueRing& ring, const RingPoly& f) {
  RingPoly g = f;
  normalize(ring, g);
  return static_cast<int>(g.size()) - 1;
}

std::vector<int> root_multiplicities(const ResidueRing& ring, RingPoly f) {
  normalize(ring, f);
  if (f.empty()) throw DomainError("multiplicities of the zero polynomial");
  // deg F_{k-1} - deg F_k counts the roots of multiplicity >= k, where
  // F_k = gcd(F_{k-1}, F_{k-1}').
  std::vector<int> at_least;
  RingPoly cur = f;
  while (cur.size() > 1) {
    RingPoly next = ring_gcd(ring, cur, derivative(ring, cur));
    at_least.push_back(static_cast<int>(cur.size()) - static_cast<int>(next.size()));
    cur = std::move(next);
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (int i = 0; i < exact; ++i) out.push_back(static_cast<int>(k) + 1);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace locrep
