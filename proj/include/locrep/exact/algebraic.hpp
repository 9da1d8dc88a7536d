#pragma once

#include <utility>
#include <vector>

#include "locrep/exact/poly.hpp"

namespace locrep {

// Thrown when a computation in Q[t]/(phi) meets a zero divisor; `factor` is a
// nontrivial monic divisor of phi.
struct Split {
  Poly factor;
};

// Q[t]/(phi) for squarefree phi, treated as a field until a zero divisor
// shows up (dynamic evaluation).
class ResidueRing {
 public:
  explicit ResidueRing(Poly phi);
  const Poly& modulus() const { return phi_; }
  Poly reduce(const Poly& a) const { return a % phi_; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % phi_; }
  // Throws Split if a is a zero divisor, DomainError if a is zero.
  Poly inv(const Poly& a) const;
  // True iff a is zero; throws Split if a is a nonzero zero divisor.
  bool is_zero(const Poly& a) const;

 private:
  Poly phi_;
};

// Polynomial in X over a ResidueRing, coefficients lowest degree first.
using RingPoly = std::vector<Poly>;

// Multiplicities of the roots over an algebraic closure, descending.
std::vector<int> root_multiplicities(const ResidueRing& ring, RingPoly f);
// Degree of f after dropping coefficients that vanish in the ring.
int ring_degree(const ResidueRing& ring, const RingPoly& f);

// Runs fn on Q[t]/(phi), splitting phi whenever fn reports a zero divisor.
// Returns (piece, result) for a factorization of phi into the pieces.
template <class Fn>
auto dynamic_evaluate(const Poly& phi, Fn&& fn) {
  using R = decltype(fn(std::declval<const ResidueRing&>()));
  std::vector<std::pair<Poly, R>> out;
  std::vector<Poly> todo{phi.monic()};
  while (!todo.empty()) {
    Poly piece = std::move(todo.back());
    todo.pop_back();
    try {
      ResidueRing ring(piece);
      out.emplace_back(piece, fn(ring));
    } catch (const Split& s) {
      todo.push_back(s.factor);
      todo.push_back((piece / s.factor).monic());
    }
  }
  return out;
}

}  // namespace locrep
