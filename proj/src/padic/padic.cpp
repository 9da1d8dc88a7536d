#include "locrep/padic/padic.hpp"

#include <algorithm>

#include "locrep/errors.hpp"
#include "locrep/exact/poly_fp.hpp"

namespace locrep::padic {

namespace {

using IntPoly = std::vector<Int>;

Int eval(const IntPoly& f, const Int& x) {
  Int r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

std::uint64_t eval_mod(const IntPoly& f, std::uint64_t r, std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * r + mod_u64(f[i], p)) % p;
  return static_cast<std::uint64_t>(acc);
}

// G(r + p Y)
IntPoly shift_scale(IntPoly g, const Int& r, const Int& p) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) g[j] += r * g[j + 1];
  Int pk = 1;
  for (auto& c : g) {
    c *= pk;
    pk *= p;
  }
  return g;
}

int min_valuation(const IntPoly& g, std::uint64_t p) {
  int m = kInfiniteValuation;
  for (const auto& c : g) m = std::min(m, valuation(c, p));
  return m;
}

Int pow_int(std::uint64_t p, int e) { return ipow(p, static_cast<unsigned long>(e)); }

// Newton iteration on the node polynomial until the original F meets the
// Hensel condition at c = offset + scale * y.
HenselWitness lift(const IntPoly& F, const IntPoly& G, const Int& offset, const Int& scale, std::uint64_t y0,
                   std::uint64_t p) {
  const IntPoly dF = derivative(F), dG = derivative(G);
  Int y = y0, mod = p;
  for (int iter = 0; iter < 64; ++iter) {
    const Int c = offset + scale * y;
    const int v = valuation(eval(dF, c), p);
    const int k = 2 * v + 1;
    if (valuation(eval(F, c), p) >= k) {
      const Int pk = pow_int(p, k);
      return HenselWitness{mod_floor(c, pk), k, v};
    }
    mod *= mod;
    Int inv, d = mod_floor(eval(dG, y), mod);
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw DomainError("Newton step met a non-unit derivative");
    y = mod_floor(y - eval(G, y) * inv, mod);
  }
  throw DomainError("Hensel lifting did not converge");
}

IntPoly to_ints(const Poly& f) { return integer_coefficients(f); }

}  // namespace

Poly integral_squarefree(const Poly& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (f.degree() == 0) return Poly::constant(1);
  return primitive_part(squarefree_part(f));
}

namespace {

PadicDecision zp_search(const Poly& sf, std::uint64_t p, int depth_budget) {
  PadicDecision out;
  const IntPoly F = to_ints(sf);
  const Int P = p;

  struct Node {
    IntPoly g;
    Int offset;
    Int scale;
    int depth;
  };
  std::vector<Node> stack{{F, 0, 1, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    out.exhausted_depth = std::max(out.exhausted_depth, node.depth);
    const IntPoly dg = derivative(node.g);
    // Children are pushed in reverse so residues are explored in increasing order.
    std::vector<Node> children;
    for (std::uint64_t r = 0; r < p; ++r) {
      if (eval_mod(node.g, r, p) != 0) continue;
      if (eval_mod(dg, r, p) != 0) {
        out.solvable = true;
        out.witness = lift(F, node.g, node.offset, node.scale, r, p);
        return out;
      }
      if (node.depth + 1 > depth_budget) continue;
      IntPoly child = shift_scale(node.g, Int(r), P);
      const int m = min_valuation(child, p);
      const Int pm = pow_int(p, m);
      for (auto& c : child) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pm.get_mpz_t());
      children.push_back(Node{std::move(child), node.offset + node.scale * r, node.scale * P, node.depth + 1});
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return out;
}

}  // namespace

PadicDecision zp_root_exists(const Poly& f, std::uint64_t p, std::optional<int> budget) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  const Poly sf = integral_squarefree(f);
  if (sf.degree() < 1) return {};
  return zp_search(sf, p, budget ? *budget : valuation(Int(discriminant(sf).get_num()), p) + 1);
}

PadicDecision qp_root_exists_prepared(const Poly& sf, const Int& disc, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (sf.degree() < 1) return {};
  const int budget = valuation(disc, p) + 1;
  PadicDecision d = zp_search(sf, p, budget);
  if (d.solvable) return d;
  // sf(0) != 0 here, so the reversal keeps the degree and the discriminant.
  PadicDecision r = zp_search(sf.reversal(sf.degree()), p, budget);
  r.reversed = r.solvable;
  r.exhausted_depth = std::max(r.exhausted_depth, d.exhausted_depth);
  return r;
}

PadicDecision qp_root_exists(const Poly& f, std::uint64_t p) {
  const Poly sf = integral_squarefree(f);
  if (sf.degree() < 1) return {};
  return qp_root_exists_prepared(sf, Int(discriminant(sf).get_num()), p);
}

Poly integer_fiber(const RatFunc& f, const Rat& t0) {
  const auto [g, h] = integer_pair(f);
  const Poly fib = g - h * t0;
  if (fib.is_zero()) throw DomainError("constant function");
  return primitive_part(fib);
}

bool is_kp_value(const RatFunc& f, const Rat& t0, std::uint64_t p) {
  if (f(ProjRat::infinity()) == ProjRat(t0)) return true;
  const Poly fib = integer_fiber(f, t0);
  if (fib.degree() < 1) return false;
  return qp_root_exists(fib, p).solvable;
}

bool hensel_oracle(const Poly& f, std::uint64_t p) {
  const Poly sf = integral_squarefree(f);
  if (sf.degree() < 1) return false;
  const IntPoly F = to_ints(sf), dF = derivative(F);
  const int K = 2 * valuation(Int(discriminant(sf).get_num()), p) + 1;
  // Residues mod p^j with F(r) = 0 mod p^j, refined one digit at a time.
  std::vector<Int> level{0};
  Int pj = 1;
  for (int j = 1; j <= K; ++j) {
    std::vector<Int> next;
    const Int pnext = pj * p;
    for (const auto& r : level)
      for (std::uint64_t d = 0; d < p; ++d) {
        Int s = r + pj * d;
        if (mpz_divisible_p(Int(eval(F, s)).get_mpz_t(), pnext.get_mpz_t())) next.push_back(std::move(s));
      }
    level = std::move(next);
    pj = pnext;
    if (level.empty()) return false;
  }
  for (const auto& r : level)
    if (2 * valuation(eval(dF, r), p) < K) return true;
  return false;
}

bool BadPrimeSet::contains(std::uint64_t p) const {
  if (reasons.count(p)) return true;
  for (const auto& m : moduli)
    if (m != 0 && mod_u64(m, p) == 0) return true;
  return false;
}

std::vector<std::uint64_t> BadPrimeSet::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [p, _] : reasons) out.push_back(p);
  return out;
}

namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialBound);
  return primes;
}

void add_factors(BadPrimeSet& set, Int n, const std::string& reason) {
  n = abs(n);
  if (n == 0) throw DomainError("zero modulus in bad prime computation");
  if (n == 1) return;
  set.moduli.push_back(n);
  for (std::uint64_t p : trial_primes()) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      auto& r = set.reasons[p];
      if (std::find(r.begin(), r.end(), reason) == r.end()) r.push_back(reason);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n == 1) return;
  if (n.fits_ulong_p() && is_prime(n.get_ui())) {
    auto& r = set.reasons[n.get_ui()];
    if (std::find(r.begin(), r.end(), reason) == r.end()) r.push_back(reason);
  } else {
    set.unfactored_cofactor = true;
  }
}

}  // namespace

BadPrimeSet bad_primes(const std::vector<RatFunc>& fs, const Rat& t0) {
  BadPrimeSet set;
  add_factors(set, t0.get_den(), "denominator");
  for (const auto& f : fs) {
    const Poly g = integral_squarefree(integer_fiber(f, t0));
    if (g.degree() < 1) continue;
    add_factors(set, g.lc().get_num(), "leading coefficient");
    add_factors(set, discriminant(g).get_num(), "discriminant");
  }
  return set;
}

LocalSolver::LocalSolver(const RatFunc& f, const Rat& t0) {
  at_infinity_ = f(ProjRat::infinity()) == ProjRat(t0);
  fiber_ = integral_squarefree(integer_fiber(f, t0));
  if (fiber_.degree() >= 1) {
    disc_ = discriminant(fiber_).get_num();
    bad_ = fiber_.lc().get_num() * disc_;
  } else {
    bad_ = 1;
  }
}

bool LocalSolver::represents(std::uint64_t p) const {
  if (at_infinity_) return true;
  if (fiber_.degree() < 1) return false;
  if (mod_u64(bad_, p) != 0) return has_root_mod_p(reduce_mod_p(fiber_, p));
  return qp_root_exists_prepared(fiber_, disc_, p).solvable;
}

}  // namespace locrep::padic
