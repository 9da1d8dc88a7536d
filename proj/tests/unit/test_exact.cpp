#include <random>

#include "doctest.h"
#include "locrep/errors.hpp"
#include "locrep/exact/algebraic.hpp"
#include "locrep/exact/poly_fp.hpp"
#include "locrep/exact/ratfunc.hpp"

using namespace locrep;

namespace {

Poly X() { return Poly::x(); }
Poly C(long c) { return Poly::constant(c); }

Poly random_poly(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd(X() * X() - C(1), X() - C(1)) == X() - C(1));
  CHECK(gcd(X() * X() + C(1), X() * X() - C(1)) == C(1));
  CHECK(gcd(X().pow(3) - X(), X() * X() - C(1)) == X() * X() - C(1));
  CHECK(gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("gcd divides both inputs and is monic") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Poly common = random_poly(rng, 2, 3);
    Poly a = random_poly(rng, 3, 5) * common, b = random_poly(rng, 3, 5) * common;
    Poly g = gcd(a, b);
    REQUIRE_FALSE(g.is_zero());
    CHECK(g.lc() == 1);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(common.monic(), g));
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part((X() - C(1)).pow(2) * (X() + C(2))) == (X() - C(1)) * (X() + C(2)));
  CHECK(squarefree_part(X() * X()) == X());
  Poly f1 = X().pow(5) * (Rat(5) * X() - C(6));
  CHECK(squarefree_part(f1) == X() * (X() - Poly::constant(Rat(6, 5))));
  CHECK_THROWS_AS(squarefree_part(Poly()), DomainError);
}

TEST_CASE("squarefree decomposition and multiplicities") {
  Poly a = (X() - C(1)).pow(3) * (X() + C(2)).pow(2) * (X() * X() + C(1));
  CHECK(root_multiplicities(a) == std::vector<int>{3, 2, 1, 1});
  CHECK(root_multiplicities(Rat(7) * X().pow(4)) == std::vector<int>{4});
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(X() * X() - C(1), X() * X() - C(4)) == 9);
  CHECK(discriminant(X() * X() - C(4)) == 16);
  CHECK(discriminant((X() - C(1)).pow(2)) == 0);
  CHECK(discriminant(X().pow(3) - C(4)) == -432);
  // b^2 - 4ac with a = 3, b = 5, c = -7
  CHECK(discriminant(Poly{-7, 5, 3}) == 25 + 84);
  CHECK_THROWS_AS(resultant(Poly(), X()), DomainError);
}

TEST_CASE("resultant vanishes iff a common factor exists") {
  std::mt19937_64 rng(12);
  int shared = 0;
  for (int i = 0; i < 500; ++i) {
    Poly a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3);
    if (a.degree() < 1 || b.degree() < 1) continue;
    if (i % 3 == 0) {
      Poly common = Poly{Rat(static_cast<long>(rng() % 5)) - 2, 1};
      a *= common;
      b *= common;
    }
    const bool common_factor = gcd(a, b).degree() > 0;
    shared += common_factor;
    CHECK((resultant(a, b) == 0) == common_factor);
  }
  CHECK(shared > 100);
}

TEST_CASE("rational roots") {
  Poly a = (Rat(3) * X() - C(2)) * (X() + C(5)) * (X() * X() + C(2)) * (Rat(7) * X() + C(11)).pow(2);
  CHECK(rational_roots(a) == std::vector<Rat>{Rat(-5), Rat(-11, 7), Rat(2, 3)});
  CHECK(rational_roots(X() * (X() * X() - C(2))) == std::vector<Rat>{Rat(0)});
  CHECK(rational_roots(X() * X() + C(1)).empty());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> roots;
    Poly f = C(1);
    for (int k = 0; k < 3; ++k) {
      Rat r(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
      r.canonicalize();
      roots.push_back(r);
      f *= X() - Poly::constant(r);
    }
    f *= random_poly(rng, 2, 50) + Poly::monomial(Rat(1), 3);
    auto found = rational_roots(f);
    for (const auto& r : roots) CHECK(std::find(found.begin(), found.end(), r) != found.end());
    for (const auto& r : found) CHECK(f(r) == 0);
  }
}

TEST_CASE("interpolation recovers a polynomial") {
  Poly f{3, -1, 0, Rat(2, 5), 7};
  std::vector<Rat> xs, ys;
  for (long t = -2; t <= 2; ++t) {
    xs.emplace_back(t);
    ys.push_back(f(Rat(t)));
  }
  CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("ratfunc_make reduces") {
  RatFunc f = RatFunc::make(X() * X() - C(1), X() - C(1));
  CHECK(f == RatFunc(X() + C(1)));
  CHECK(f.degree() == 1);
  RatFunc f1 = RatFunc::make((X() * X() + Rat(10) * X() + C(5)).pow(3), X());
  CHECK(f1.degree() == 6);
  RatFunc f3 = RatFunc::make(C(1), C(1) - X() * X());
  CHECK(f3.degree() == 2);
  CHECK(f3.den().lc() == 1);
  CHECK_THROWS_AS(RatFunc::make(X(), Poly()), DomainError);
}

TEST_CASE("composition") {
  CHECK(RatFunc(X() * X()).compose(RatFunc(X() + C(1))) == RatFunc(X() * X() + Rat(2) * X() + C(1)));
  RatFunc f3 = RatFunc::make(C(1), C(1) - X() * X());
  CHECK(f3.compose(RatFunc(X() * X())).degree() == 4);
}

TEST_CASE("composition multiplies degrees") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    RatFunc f = RatFunc::make(random_poly(rng, 4, 4), random_poly(rng, 4, 4));
    RatFunc g = RatFunc::make(random_poly(rng, 4, 4), random_poly(rng, 4, 4));
    if (f.degree() == 0 || g.degree() == 0) continue;
    CHECK(f.compose(g).degree() == f.degree() * g.degree());
  }
}

TEST_CASE("evaluation on P^1") {
  RatFunc f1 = RatFunc::make((X() * X() + Rat(10) * X() + C(5)).pow(3), X());
  CHECK(f1(ProjRat::infinity()).is_infinity());
  RatFunc f3 = RatFunc::make(C(1), C(1) - X() * X());
  CHECK(f3(ProjRat(1)).is_infinity());
  CHECK(f3(ProjRat(2)) == ProjRat(Rat(-1, 3)));
  CHECK(f3(ProjRat::infinity()) == ProjRat(0));
  RatFunc q = RatFunc::make(X() * X() + C(3), X() * X() - C(3));
  CHECK(q(ProjRat::infinity()) == ProjRat(1));
}

TEST_CASE("moebius conjugation") {
  RatFunc id = RatFunc::x();
  RatFunc t3(Poly{0, -3, 0, 4});
  CHECK(moebius_conjugate(t3, id, id) == t3);
  RatFunc lambda = RatFunc::make(X() - C(1), X() + C(1));
  RatFunc g = moebius_conjugate(t3, lambda, id);
  CHECK(g == RatFunc::make(t3.num() - C(1), t3.num() + C(1)));
  RatFunc f1 = RatFunc::make((X() * X() + Rat(10) * X() + C(5)).pow(3), X());
  RatFunc mu = RatFunc::make(Rat(2) * X() + C(3), X() - C(7));
  CHECK(moebius_conjugate(f1, lambda, mu).degree() == 6);
  CHECK_THROWS_AS(moebius_conjugate(f1, RatFunc(X() * X()), mu), DomainError);
}

TEST_CASE("moebius conjugation is invertible") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = RatFunc::make(random_poly(rng, 4, 5), random_poly(rng, 3, 5));
    Poly a = random_poly(rng, 1, 5), b = random_poly(rng, 1, 5);
    RatFunc lambda = RatFunc::make(a, b);
    RatFunc mu = RatFunc::make(random_poly(rng, 1, 5), random_poly(rng, 1, 5));
    if (lambda.degree() != 1 || mu.degree() != 1 || f.degree() < 1) continue;
    RatFunc h = moebius_conjugate(f, lambda, mu);
    CHECK(h.degree() == f.degree());
    CHECK(moebius_conjugate(h, moebius_inverse(lambda), moebius_inverse(mu)) == f);
  }
}

TEST_CASE("reduction modulo p") {
  Poly a{Rat(-1, 2), 0, 1};
  CHECK(reduce_mod_p(a, 7) == PolyFp(7, {3, 0, 1}));
  CHECK_THROWS_AS(reduce_mod_p(a, 2), BadPrime);
  Poly b = Rat(5) * X().pow(6) - Rat(6) * X().pow(5) + C(1);
  CHECK_THROWS_AS(reduce_mod_p(b, 5), BadPrime);
}

TEST_CASE("degree partitions modulo p") {
  Poly x2p1 = X() * X() + C(1);
  CHECK(degree_partition_mod_p(reduce_mod_p(x2p1, 5)) == std::vector<int>{1, 1});
  CHECK(degree_partition_mod_p(reduce_mod_p(x2p1, 7)) == std::vector<int>{2});
  CHECK(degree_partition_mod_p(reduce_mod_p(X().pow(3) - X(), 5)) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(degree_partition_mod_p(reduce_mod_p((X() - C(1)).pow(2), 5)), DomainError);
  // X^5 - 2 over F_11: 2 is not a fifth power, the cyclotomic field is F_11.
  CHECK(degree_partition_mod_p(reduce_mod_p(X().pow(5) - C(2), 11)) == std::vector<int>{5});
}

TEST_CASE("degree partitions sum to the degree") {
  std::mt19937_64 rng(16);
  const std::uint64_t primes[] = {3, 5, 7, 11, 13, 101};
  for (int i = 0; i < 300; ++i) {
    Poly a = random_poly(rng, 7, 30);
    std::uint64_t p = primes[i % 6];
    PolyFp ap(p);
    try {
      ap = reduce_mod_p(a, p);
    } catch (const BadPrime&) {
      continue;
    }
    if (ap.degree() < 1 || !is_squarefree(ap)) continue;
    auto parts = degree_partition_mod_p(ap);
    int sum = 0;
    for (int d : parts) sum += d;
    CHECK(sum == a.degree());
    CHECK(has_root_mod_p(ap) == (parts.back() == 1));
  }
}

TEST_CASE("dynamic evaluation splits at zero divisors") {
  // F = X^2 + (t - 1) X over Q[t]/(t^2 - 1): a double root at t = 1.
  Poly t = Poly::x();
  RingPoly F{Poly(), t - C(1), C(1)};
  auto pieces = dynamic_evaluate(t * t - C(1), [&](const ResidueRing& r) {
    return root_multiplicities(r, F);
  });
  REQUIRE(pieces.size() == 2);
  for (const auto& [piece, mult] : pieces) {
    if (piece == t - C(1)) CHECK(mult == std::vector<int>{2});
    else CHECK(mult == std::vector<int>{1, 1});
  }
  // Over Q(sqrt 2): (X - t)^2 (X + 1).
  RingPoly G{t * t, t * t - Rat(2) * t, C(1) - Rat(2) * t, C(1)};
  auto whole = dynamic_evaluate(t * t - C(2), [&](const ResidueRing& r) {
    return root_multiplicities(r, G);
  });
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].second == std::vector<int>{2, 1});
}
