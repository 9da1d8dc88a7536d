#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "locrep/errors.hpp"
#include "locrep/perm/builders.hpp"
#include "locrep/ramification/ramification.hpp"

using namespace locrep;
using namespace locrep::ram;

namespace {

Poly X() { return Poly::x(); }
Poly C(const Rat& c) { return Poly::constant(c); }
RatFunc R(const Poly& g, const Poly& h = C(1)) { return RatFunc::make(g, h); }

RatFunc chebyshev(int n) {
  Poly a = C(1), b = X();
  if (n == 0) return R(a);
  for (int k = 1; k < n; ++k) {
    Poly c = C(2) * X() * b - a;
    a = b;
    b = c;
  }
  return R(b);
}

RatFunc ico1() { return R((X() * X() + C(10) * X() + C(5)).pow(3), X()); }
RatFunc ico2() { return R(X().pow(3) * (X() * X() + C(5) * X() + C(40))); }
RatFunc ico3() {
  return R((C(5) * X()).pow(3) * (C(8) * X() * X() + C(25) * X() + C(20)).pow(3),
           (X() * X() + C(5) * X() + C(5)).pow(5));
}
RatFunc s6a() { return R(X().pow(5) * (C(5) * X() - C(6))); }
RatFunc s6b() {
  return R(C(46656) * X(), (X() - C(1)).pow(3) * (X() - C(16)).pow(2) * (X() - C(25)));
}
RatFunc redei3(const Rat& a) { return R(X().pow(3) + C(3 * a) * X(), C(3) * X() * X() + C(a)); }

// c * prod (t - r_i)^{m_i}
Poly roots_poly(const Rat& c, const std::vector<std::pair<Rat, unsigned>>& roots) {
  Poly p = C(c);
  for (const auto& [r, m] : roots) p *= (X() - C(r)).pow(m);
  return p;
}

std::vector<RatFunc> sample_functions() {
  return {R(X() * X()),
          R(X() * X() + C(1)),
          R(C(1), C(1) - X() * X()),
          chebyshev(3),
          chebyshev(5),
          chebyshev(7),
          R(X().pow(5)),
          redei3(2),
          ico1(),
          ico2(),
          ico3(),
          s6a(),
          s6b(),
          R(C(5) * X() * X() - C(1)),
          R(X().pow(4) + X()),
          R(-(X().pow(3) - C(1)), C(4) * X()),
          R(X() * X() + C(1), X() * X() - C(1))};
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree() || a.is_zero()) return false;
  return a * b.lc() == b * a.lc();
}

}  // namespace

TEST_CASE("formal discriminants match frozen values") {
  const Rat k1728 = 1728;
  CHECK(formal_discriminant(ico1()) == roots_poly(3125, {{0, 4}, {k1728, 2}}));
  CHECK(formal_discriminant(ico2()) == roots_poly(3125, {{0, 2}, {k1728, 2}}));
  CHECK(proportional(formal_discriminant(ico3()), roots_poly(1, {{0, 6}, {k1728, 4}})));
  CHECK(formal_discriminant(chebyshev(3)) == roots_poly(-432, {{1, 1}, {-1, 1}}));
  CHECK(formal_discriminant(chebyshev(5)) == roots_poly(204800000, {{1, 2}, {-1, 2}}));
  CHECK(formal_discriminant(chebyshev(7)) ==
        roots_poly(Rat(Int("-56593444029595648")), {{1, 3}, {-1, 3}}));
  CHECK(formal_discriminant(R(X().pow(5))) == roots_poly(3125, {{0, 4}}));
  CHECK(formal_discriminant(redei3(2)) == C(-216) * (X() * X() - C(2)).pow(2));
  CHECK(formal_discriminant(s6a()) == roots_poly(145800000, {{0, 4}, {-1, 1}}));
  CHECK(proportional(formal_discriminant(s6b()), roots_poly(1, {{0, 4}, {-1, 3}})));
  const Poly quartic = C(-256) * X().pow(3) - C(27);
  CHECK(formal_discriminant(R(X().pow(4) + X())) == quartic);
  CHECK(formal_discriminant(R(-(X().pow(3) - C(1)), C(4) * X())) == quartic);
  CHECK(formal_discriminant(R(X() + C(3))) == C(1));
}

TEST_CASE("critical values") {
  for (int n = 2; n <= 6; ++n) {
    auto d = critical_values(R(X().pow(static_cast<unsigned>(n))));
    CHECK(d.branch_polynomial == X());
    CHECK(d.infinity_is_branch);
    REQUIRE(d.points.size() == 2);
    CHECK(d.points[0].partition == Partition{n});
    CHECK(d.points[1].partition == Partition{n});
  }
  for (const auto& f : {ico1(), ico2(), ico3()}) {
    auto d = critical_values(f);
    CHECK(d.branch_polynomial == X() * (X() - C(1728)));
    CHECK(d.infinity_is_branch);
    CHECK(rh_verify(d) == 0);
  }
  auto t3 = critical_values(chebyshev(3));
  CHECK(t3.branch_polynomial == X() * X() - C(1));
  REQUIRE(t3.points.size() == 3);
  CHECK(t3.points[0].value == -1);
  CHECK(t3.points[1].value == 1);
  CHECK(t3.points[2].kind == BranchPoint::Kind::Infinity);
}

TEST_CASE("algebraic branch points are reported per factor") {
  auto d = critical_values(redei3(2));
  CHECK(d.branch_polynomial == X() * X() - C(2));
  CHECK_FALSE(d.infinity_is_branch);
  REQUIRE(d.points.size() == 1);
  CHECK(d.points[0].kind == BranchPoint::Kind::Algebraic);
  CHECK(d.points[0].label() == "t^2 - 2");
  CHECK(d.points[0].partition == Partition{3});
  CHECK(rh_verify(d) == 0);

  auto pieces = multiplicity_partition(R(X().pow(4) + X()), C(-256) * X().pow(3) - C(27));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].second == Partition{2, 1, 1});
}

TEST_CASE("multiplicity partitions of X^5(5X-6)") {
  CHECK(multiplicity_partition(s6a(), 0) == Partition{5, 1});
  CHECK(multiplicity_partition(s6a(), -1) == Partition{2, 1, 1, 1, 1});
  CHECK(multiplicity_partition(s6a(), ProjRat::infinity()) == Partition{6});
  CHECK(rh_verify({{5, 1}, {2, 1, 1, 1, 1}, {6}}, 6) == 0);
  CHECK(multiplicity_partition(s6a(), 7) == Partition{1, 1, 1, 1, 1, 1});
}

TEST_CASE("partitions include the point at infinity") {
  // 1/(1 - X^2) takes the value 0 only at infinity, doubly.
  CHECK(multiplicity_partition(R(C(1), C(1) - X() * X()), 0) == Partition{2});
  CHECK(multiplicity_partition(R(C(1), C(1) - X() * X()), ProjRat::infinity()) == Partition{1, 1});
  // (X^2 + 1)/(X^2 - 1) at its value 1 at infinity
  CHECK(multiplicity_partition(R(X() * X() + C(1), X() * X() - C(1)), 1) == Partition{2});
  CHECK(multiplicity_partition(ico1(), ProjRat::infinity()) == Partition{5, 1});
}

TEST_CASE("rh_verify examples") {
  CHECK(rh_verify({{5, 1}, {2, 1, 1, 1, 1}, {6}}, 6) == 0);
  CHECK(rh_verify({{2}, {2}}, 2) == 0);
  CHECK(rh_verify({{5, 1}, {6}}, 6) == -1);
}

TEST_CASE("Riemann-Hurwitz holds for sample functions") {
  for (const auto& f : sample_functions()) {
    CAPTURE(f.to_string());
    auto d = critical_values(f);
    CHECK(rh_verify(d) == 0);
    for (const auto& b : d.points) CHECK(std::accumulate(b.partition.begin(), b.partition.end(), 0) == f.degree());
  }
}

TEST_CASE("critical values agree with multiplicity partitions") {
  for (const auto& f : sample_functions()) {
    CAPTURE(f.to_string());
    auto d = critical_values(f);
    for (const auto& b : d.points) {
      CHECK_FALSE(is_trivial(b.partition));
      if (b.kind == BranchPoint::Kind::Rational) {
        CHECK(d.branch_polynomial(b.value) == 0);
        CHECK(multiplicity_partition(f, b.value) == b.partition);
      }
    }
    for (long t0 = -30; t0 <= 30; ++t0) {
      const bool root = d.branch_polynomial(t0) == 0;
      CHECK(root == !is_trivial(multiplicity_partition(f, t0)));
    }
  }
}

TEST_CASE("Moebius conjugation preserves partitions") {
  const RatFunc lambda = R(C(2) * X() + C(1), X() + C(3));  // (2t + 1)/(t + 3)
  const RatFunc mu = R(X() - C(1), C(2) * X() + C(5));
  for (const auto& f : sample_functions()) {
    CAPTURE(f.to_string());
    const RatFunc g = moebius_conjugate(f, lambda, mu);
    auto df = critical_values(f), dg = critical_values(g);
    std::multiset<Partition> pf, pg;
    for (const auto& b : df.points)
      for (int k = 0; k < b.count(); ++k) pf.insert(b.partition);
    for (const auto& b : dg.points)
      for (int k = 0; k < b.count(); ++k) pg.insert(b.partition);
    CHECK(pf == pg);
    for (const auto& b : df.points) {
      if (b.kind == BranchPoint::Kind::Algebraic) continue;
      const ProjRat image = lambda(b.kind == BranchPoint::Kind::Infinity ? ProjRat::infinity() : ProjRat(b.value));
      CHECK(multiplicity_partition(g, image) == b.partition);
    }
  }
}

TEST_CASE("branch cycle tuples") {
  using perm::Perm;
  // A 5-cycle, a transposition and a 6-cycle with product 1 in S_6.
  perm::GroupSpec s6 = perm::symmetric(6);
  int found = 0;
  const Perm five = Perm::from_cycles(6, {{0, 1, 2, 3, 4}});
  for (const auto& t : s6.elements()) {
    if (t.cycle_type() != std::vector<int>{2, 1, 1, 1, 1}) continue;
    const Perm third = (five * t).inverse();
    if (third.cycle_type() != std::vector<int>{6}) continue;
    CHECK(verify_branch_cycle_tuple({five, t, third}).valid());
    ++found;
  }
  CHECK(found > 0);
  const Perm c = Perm::from_cycles(3, {{0, 1, 2}});
  auto v = verify_branch_cycle_tuple({c, c.inverse()});
  CHECK(v.product_identity);
  CHECK(v.transitive);
  CHECK(v.rh_deficit == 0);
  const Perm s = Perm::from_cycles(3, {{0, 1}});
  auto w = verify_branch_cycle_tuple({s, s});
  CHECK(w.product_identity);
  CHECK_FALSE(w.transitive);
  CHECK_FALSE(w.valid());
}

TEST_CASE("Galois closure genus tables") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(galois_closure_genus(n, {n, n}) == 0);
    CHECK(galois_closure_genus(2 * n, {n, 2, 2}) == 0);
  }
  CHECK(galois_closure_genus(12, {2, 3, 3}) == 0);
  CHECK(galois_closure_genus(24, {2, 3, 4}) == 0);
  CHECK(galois_closure_genus(60, {2, 3, 5}) == 0);
  for (std::uint64_t order : {4ULL, 12ULL, 48ULL, 600ULL}) {
    CHECK(galois_closure_genus(order, {2, 2, 2, 2}) == 1);
    CHECK(galois_closure_genus(order, {3, 3, 3}) == 1);
    CHECK(galois_closure_genus(order, {2, 4, 4}) == 1);
    CHECK(galois_closure_genus(order, {2, 3, 6}) == 1);
  }
  CHECK(galois_closure_genus(60, {2, 3, 7}) != 0);
  CHECK_THROWS_AS(galois_closure_genus(6, {1, 3}), DomainError);
}

TEST_CASE("quadratic resolvents") {
  auto x2 = quadratic_resolvent(R(X() * X()));
  CHECK(x2.part == X());
  CHECK(x2.constant == 1);
  auto f3 = quadratic_resolvent(R(X() * X() + C(1), X() * X() - C(1)));
  CHECK(f3.part == X() * X() - C(1));
  auto t3 = quadratic_resolvent(chebyshev(3));
  CHECK(t3 == SquareClass{-3, X() * X() - C(1)});
  CHECK(t3 == square_class(C(27) * (C(1) - X() * X())));
  CHECK_FALSE(t3 == square_class(X() * X() - C(1)));
  auto r = quadratic_resolvent(redei3(2));
  CHECK(r.part == C(1));
  CHECK(r.constant == -6);
}

TEST_CASE("quadratic companions") {
  CHECK(quadratic_companion(X()) == R(X() * X()));
  for (const Poly& d : {X() * X() - C(1), C(3) * (X() * X() - C(1)), C(-3) * (X() * X() - C(1)),
                        C(2) * X() - C(7), X() * X() + C(1)}) {
    CAPTURE(d.to_string('t'));
    RatFunc f = quadratic_companion(d);
    CHECK(f.degree() == 2);
    CHECK(quadratic_resolvent(f) == square_class(d));
  }
  CHECK_THROWS_AS(quadratic_companion(C(3)), DomainError);
  CHECK_THROWS_AS(quadratic_companion(X() * X()), DomainError);
  CHECK_THROWS_AS(quadratic_companion(X().pow(3) - C(2)), DomainError);
  // y^2 = -(a^2 + 1) has no real point.
  CHECK_THROWS_AS(quadratic_companion(-(X() * X() + C(1))), NoRationalPoint);
}

TEST_CASE("companion and resolvent round trip") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> small(-9, 9), cdist(1, 12);
  int done = 0;
  while (done < 100) {
    Poly d;
    if (done % 4 == 0) {
      const long a = small(rng);
      if (a == 0) continue;
      d = C(a) * X() + C(small(rng));
    } else {
      // Quadratics built to pass through a point (a0, y0) of small height.
      const long c = (rng() % 2 ? 1 : -1) * cdist(rng), a0 = small(rng), y0 = small(rng), beta = small(rng);
      if (y0 == 0) continue;
      const Rat gamma = Rat(y0 * y0, 1) / c - a0 * a0 - beta * a0;
      d = C(c) * (X() * X() + C(beta) * X() + C(gamma));
    }
    if (squarefree_part(d).degree() != d.degree()) continue;
    RatFunc f = quadratic_companion(d);
    CHECK(f.degree() == 2);
    CHECK(quadratic_resolvent(f) == square_class(d));
    ++done;
  }
}
