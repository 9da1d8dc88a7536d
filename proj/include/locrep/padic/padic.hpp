#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locrep/exact/ratfunc.hpp"

namespace locrep::padic {

// r with v_p(F(r)) >= k and k > 2 v, v = v_p(F'(r)): Hensel's lemma then
// gives a root congruent to r modulo p^(k - v).
struct HenselWitness {
  Int residue;
  int k = 0;
  int v = 0;
};

struct PadicDecision {
  bool solvable = false;
  std::optional<HenselWitness> witness;
  // The witness is for the reversal X^n F(1/X) (root of negative valuation).
  bool reversed = false;
  // Deepest descent level visited.
  int exhausted_depth = 0;
};

// Integer polynomial with content 1 and positive leading coefficient,
// squarefree, with the same roots as F.
Poly integral_squarefree(const Poly& f);

// Root in Z_p. `budget` overrides the descent depth v_p(disc) + 1.
PadicDecision zp_root_exists(const Poly& f, std::uint64_t p, std::optional<int> budget = std::nullopt);
PadicDecision qp_root_exists(const Poly& f, std::uint64_t p);
// qp_root_exists for sf = integral_squarefree(sf) with disc the numerator of
// its discriminant, skipping their recomputation.
PadicDecision qp_root_exists_prepared(const Poly& sf, const Int& disc, std::uint64_t p);

// Whether t0 = f(beta) for some beta in P^1(Q_p).
bool is_kp_value(const RatFunc& f, const Rat& t0, std::uint64_t p);

// Independent check by residue enumeration: some r mod p^K, K = 2 v_p(disc) + 1,
// has v_p(F(r)) >= K and 2 v_p(F'(r)) < K.
bool hensel_oracle(const Poly& f, std::uint64_t p);

// The integer fiber g - t0 h of f (g, h scaled to integer coefficients with
// content 1), made primitive.
Poly integer_fiber(const RatFunc& f, const Rat& t0);

struct BadPrimeSet {
  // prime -> reasons ("denominator", "leading coefficient", "discriminant")
  std::map<std::uint64_t, std::vector<std::string>> reasons;
  // Integers whose prime divisors are the bad primes; membership is decided
  // by divisibility, so it is exact even when factoring was incomplete.
  std::vector<Int> moduli;
  bool unfactored_cofactor = false;

  bool contains(std::uint64_t p) const;
  std::vector<std::uint64_t> primes() const;
};

BadPrimeSet bad_primes(const std::vector<RatFunc>& fs, const Rat& t0);

// Decides is_kp_value(f, t0, p) for many p, with a mod-p root test at
// primes not dividing the leading coefficient or discriminant.
class LocalSolver {
 public:
  LocalSolver(const RatFunc& f, const Rat& t0);
  bool represents(std::uint64_t p) const;
  bool at_infinity() const { return at_infinity_; }
  const Poly& fiber() const { return fiber_; }
  // lc * disc of the fiber; primes dividing it are bad.
  const Int& bad_modulus() const { return bad_; }

 private:
  bool at_infinity_ = false;
  Poly fiber_;
  Int disc_;
  Int bad_;
};

}  // namespace locrep::padic
