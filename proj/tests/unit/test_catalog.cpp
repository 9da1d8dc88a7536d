#include <algorithm>

#include "doctest.h"
#include "locrep/catalog/catalog.hpp"
#include "locrep/errors.hpp"
#include "locrep/verify/verify.hpp"

using namespace locrep;
using namespace locrep::catalog;

namespace {

Poly X() { return Poly::x(); }
Poly C(const Rat& c) { return Poly::constant(c); }

const ram::BranchPoint* point(const ram::BranchData& d, const std::string& label) {
  for (const auto& b : d.points)
    if (b.label() == label) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("chebyshev polynomials") {
  CHECK(chebyshev(1) == X());
  CHECK(chebyshev(2) == C(2) * X() * X() - C(1));
  CHECK(chebyshev(3) == C(4) * X().pow(3) - C(3) * X());
  CHECK_THROWS_AS(chebyshev(-1), DomainError);

  const auto cv = ram::critical_values(RatFunc(chebyshev(5)));
  REQUIRE(cv.points.size() == 3);
  CHECK(cv.points[0].value == Rat(-1));
  CHECK(cv.points[0].partition == ram::Partition{2, 2, 1});
  CHECK(cv.points[1].value == Rat(1));
  CHECK(cv.points[1].partition == ram::Partition{2, 2, 1});
  CHECK(cv.points[2].kind == ram::BranchPoint::Kind::Infinity);
  CHECK(cv.points[2].partition == ram::Partition{5});
}

TEST_CASE("chebyshev nesting") {
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; m * n <= 40; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(chebyshev(m).compose(chebyshev(n)) == chebyshev(m * n));
    }
}

TEST_CASE("redei functions") {
  for (const Rat& a : {Rat(2), Rat(-1), Rat(3, 5)}) {
    const Poly num = X().pow(3) + C(3 * a) * X();
    const Poly den = C(3) * X() * X() + C(a);
    CHECK(redei(3, a) == RatFunc::make(num, den));
  }
  CHECK(redei(1, 2) == RatFunc::x());
  CHECK_THROWS_AS(redei(3, 4), DomainError);
  CHECK_THROWS_AS(redei(3, Rat(9, 4)), DomainError);

  // disc_X(X^3 + 6X - t(3X^2 + 2)) = -216 (t^2 - 2)^2.
  const auto cv = ram::critical_values(redei(3, 2));
  CHECK(cv.branch_polynomial == X() * X() - C(2));
  REQUIRE(cv.points.size() == 1);
  CHECK(cv.points[0].label() == "t^2 - 2");
  CHECK(cv.points[0].partition == ram::Partition{3});
  CHECK(ram::quadratic_resolvent(redei(3, 2)) == ram::square_class(C(-6)));
}

TEST_CASE("redei nesting") {
  for (const Rat& a : {Rat(2), Rat(-3)})
    for (long m = 1; m <= 21; m += 2)
      for (long n = 1; m * n <= 21; n += 2) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(redei(m, a).compose(redei(n, a)) == redei(m * n, a));
      }
}

TEST_CASE("entry names") {
  const auto names = entry_names();
  for (const char* n : {"intro-triple", "icosahedral-pair", "icosahedral-triple", "m11-pair", "pgl28-pair",
                        "quartic-resolvent", "s6-triple", "chebyshev-monomial(3)", "many-redei(3,2)",
                        "thm56-model(3)"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (const auto& n : names) CHECK_NOTHROW(entry(n));
  CHECK_THROWS_AS(entry("nonsense"), DomainError);
  CHECK_THROWS_AS(entry("chebyshev-monomial(4)"), DomainError);
  CHECK_THROWS_AS(entry("many-redei(5,2)"), DomainError);
  CHECK_THROWS_AS(entry("many-redei(3,3)"), DomainError);
  CHECK_THROWS_AS(entry("thm56-model(7)"), DomainError);
  CHECK(entry("chebyshev-monomial").name == "chebyshev-monomial(5)");
  CHECK(entry("quartic-resolvent").name == "quartic-resolvent(0,1)");
}

TEST_CASE("quartic default") {
  const auto [a, b] = quartic_default();
  CHECK(a == Rat(0));
  CHECK(b == Rat(1));
}

TEST_CASE("pgl28 transcription checksum") {
  const auto e = entry("pgl28-pair");
  REQUIRE(e.functions.size() == 2);
  const auto& f2 = e.functions[1].f;
  CHECK(f2.degree() == 28);
  const auto cv = ram::critical_values(f2);
  CHECK(cv.points.size() == 3);
  CHECK(ram::rh_verify(cv) == 0);
  REQUIRE(point(cv, "442368"));
  CHECK(point(cv, "inf")->partition == ram::Partition{7, 7, 7, 7});
}

TEST_CASE("catalog degrees and branch data") {
  for (const auto& n : entry_names()) {
    const auto e = entry(n);
    for (const auto& f : e.functions) {
      CAPTURE(n);
      CAPTURE(f.label);
      CHECK(f.f.degree() == f.degree);
    }
  }
  const auto ico = entry("icosahedral-triple");
  for (const auto& f : ico.functions) {
    const auto cv = ram::critical_values(f.f);
    CHECK(ram::rh_verify(cv) == 0);
    for (const auto& b : cv.points)
      if (b.kind == ram::BranchPoint::Kind::Rational) CHECK((b.value == Rat(0) || b.value == Rat(1728)));
  }
}

TEST_CASE("models match the entries") {
  for (const auto& n : entry_names()) {
    const auto e = entry(n);
    if (!e.model || e.abstract) continue;
    CAPTURE(n);
    const auto m = e.model();
    REQUIRE(m.blocks.size() == e.functions.size());
    for (std::size_t i = 0; i < m.blocks.size(); ++i)
      CHECK(m.blocks[i].size() == static_cast<std::size_t>(e.functions[i].degree));
  }
  CHECK(icosahedral_triple_model().group.order() == 1200);
  CHECK(chebyshev_monomial_model(5).group.order() == 200);
  CHECK(many_redei_model(3, 2).group.order() == 216);
  CHECK(thm56_model(3).group.order() == 2592);
}

TEST_CASE("entry verification") {
  VerifyOptions o;
  o.t0_samples = 12;
  o.prime_bound = 600;
  o.consistency_bound = 2000;
  o.minimality_samples = 30;
  for (const char* n : {"intro-triple", "quartic-resolvent(0,1)", "s6-triple", "icosahedral-triple",
                        "chebyshev-monomial(3)", "many-redei(3,2)", "thm56-model(3)"}) {
    const auto r = entry_verify(n, o);
    CAPTURE(n);
    for (const auto& c : r.checks) {
      CAPTURE(c.check);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(r.pass());
  }
}

TEST_CASE("thm56 model is covered with a redundant block") {
  const auto m = thm56_model(3);
  const auto c = verify::certify_with_group(m);
  CHECK(c.covered);
  CHECK_FALSE(c.minimal);
  const auto r = verify::certify_with_group(perm::restrict_blocks(m, {"f", "f2", "Tq"}));
  CHECK(r.covered);
  CHECK(r.minimal);
}
