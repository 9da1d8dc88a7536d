#include "doctest.h"
#include "locrep/catalog/catalog.hpp"
#include "locrep/cli/parse.hpp"
#include "locrep/cli/report.hpp"
#include "locrep/errors.hpp"

using namespace locrep;
using namespace locrep::cli;

namespace {

Poly X() { return Poly::x(); }
Poly C(const Rat& c) { return Poly::constant(c); }

std::size_t parse_error_offset(const std::string& s) {
  try {
    parse_ratfunc(s);
  } catch (const ParseError& e) {
    return e.offset;
  }
  FAIL("no parse error for " << s);
  return 0;
}

JobConfig config(std::vector<std::string> exprs, std::uint64_t bound = 500) {
  JobConfig c;
  c.exprs = std::move(exprs);
  c.prime_bound = bound;
  return c;
}

}  // namespace

TEST_CASE("parse examples") {
  const RatFunc f1 = parse_ratfunc("(X^2+10*X+5)^3/X");
  CHECK(f1.degree() == 6);
  CHECK(f1 == RatFunc::make((X() * X() + C(10) * X() + C(5)).pow(3), X()));
  CHECK(parse_ratfunc("1/(1-X^2)") == RatFunc::make(C(1), C(1) - X() * X()));
  CHECK(parse_ratfunc("x^2") == parse_ratfunc("X^2"));
  CHECK(parse_ratfunc(" 5 * X ^ 2 - 1 ") == RatFunc(C(5) * X() * X() - C(1)));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_ratfunc("-X^2") == RatFunc(C(-1) * X() * X()));
  CHECK(parse_ratfunc("(-X)^2") == RatFunc(X() * X()));
  CHECK(parse_ratfunc("2*X^3") == RatFunc(C(2) * X().pow(3)));
  CHECK(parse_ratfunc("1-X-1") == RatFunc(C(-1) * X()));
  CHECK(parse_ratfunc("X/2/X") == RatFunc(C(Rat(1, 2))));
  CHECK(parse_ratfunc("1+2*3") == RatFunc(C(7)));
  CHECK(parse_ratfunc("-2*-X") == RatFunc(C(2) * X()));
}

TEST_CASE("parse errors") {
  CHECK(parse_error_offset("X^^2") == 2);
  CHECK(parse_error_offset("X+") == 2);
  CHECK(parse_error_offset("(X") == 2);
  CHECK(parse_error_offset("X)") == 1);
  CHECK(parse_error_offset("2X") == 1);
  CHECK(parse_error_offset("X^-1") == 2);
  // Exponents are literals, so ^ does not chain.
  CHECK(parse_error_offset("2^3^1") == 3);
  CHECK(parse_error_offset("Y") == 0);
  CHECK(parse_error_offset("") == 0);
  CHECK(parse_error_offset("1/(X-X)") == 1);
  CHECK(parse_error_offset("X^99999") == 2);
  CHECK_THROWS_AS(parse_rational("inf"), ParseError);
  CHECK_THROWS_AS(parse_rational("X"), ParseError);
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
}

TEST_CASE("round trip of catalog expressions") {
  for (const auto& n : catalog::entry_names())
    for (const auto& f : catalog::entry(n).functions) {
      CAPTURE(n);
      CAPTURE(f.label);
      CHECK(parse_ratfunc(format_ratfunc(f.f)) == f.f);
    }
  for (const char* s : {"3/5*X^2 - 1", "1/(1-X^2)", "-X/(X^2+1)", "(2*X-3)^4/(7*X)"}) {
    const RatFunc f = parse_ratfunc(s);
    CHECK(parse_ratfunc(format_ratfunc(f)) == f);
  }
}

TEST_CASE("check reports") {
  auto fail = run_check(config({"X^2", "X^3+1"}));
  CHECK(exit_code(fail) == kFail);
  REQUIRE(fail["witness"].is_object());
  CHECK(fail["per_t0"].size() == 25);
  CHECK(fail["config"]["seed"] == 0);

  JobConfig intro;
  intro.catalog = "intro-triple";
  auto pass = run_check(intro);
  CHECK(exit_code(pass) == kPass);
  CHECK(pass["certificate"]["covered"] == true);
  CHECK(pass["set"].size() == 3);

  JobConfig mixed = config({"X^2"});
  mixed.catalog = "intro-triple";
  CHECK_THROWS_AS(run_check(mixed), DomainError);
  CHECK_THROWS_AS(run_check(JobConfig{}), DomainError);
  JobConfig abstract;
  abstract.catalog = "thm56-model(3)";
  CHECK_THROWS_AS(run_check(abstract), DomainError);
}

TEST_CASE("exit codes come from the report") {
  auto r = run_check(config({"X^2", "X^3+1"}));
  const json copy = json::parse(r.dump());
  CHECK(exit_code(copy) == exit_code(r));

  // Marking every exceptional prime bad turns the failure into a pass.
  for (auto& t : r["per_t0"]) t["bad"] = t["exceptional"];
  CHECK(exit_code(r) == kPass);

  json m = {{"minimality", json::array({{{"dropped", "f1"}, {"witness", nullptr}}})}};
  CHECK(exit_code(m) == kInconclusive);
  CHECK(exit_code({{"error", {{"kind", "cap"}, {"message", ""}}}}) == kInconclusive);
  CHECK(exit_code({{"error", {{"kind", "usage"}, {"message", ""}}}}) == kUsage);
  CHECK(exit_code({{"padic", {{"solvable", false}}}}) == kFail);
  CHECK(exit_code({{"certificate", nullptr}}) == kPass);
}

TEST_CASE("padic and branch commands") {
  JobConfig c = config({"X^2"});
  c.t0 = Rat(2);
  c.p = 7;
  auto r = run_padic(c);
  CHECK(exit_code(r) == kPass);
  CHECK(r["padic"]["witness"]["residue"] == "3");
  c.p = 5;
  CHECK(exit_code(run_padic(c)) == kFail);
  c.p = 6;
  CHECK_THROWS_AS(run_padic(c), DomainError);

  // A pole at infinity of value 1.
  JobConfig inf = config({"(X^2+1)/(X^2+X)"});
  inf.t0 = Rat(1);
  inf.p = 3;
  CHECK(run_padic(inf)["padic"]["at_infinity"] == true);

  auto b = run_branch(config({"X^5*(5*X-6)"}));
  CHECK(exit_code(b) == kPass);
  const auto& pts = b["branch"][0]["points"];
  REQUIRE(pts.size() == 3);
  CHECK(pts[0]["at"] == "-1");
  CHECK(pts[0]["partition"] == json::array({2, 1, 1, 1, 1}));
  CHECK(pts[1]["partition"] == json::array({5, 1}));
  CHECK(pts[2]["at"] == "inf");
  CHECK(pts[2]["partition"] == json::array({6}));
}

TEST_CASE("minimal command") {
  JobConfig c;
  c.catalog = "intro-triple";
  c.t0_samples = 40;
  c.prime_bound = 500;
  auto r = run_minimal(c);
  CHECK(exit_code(r) == kPass);
  CHECK(r["minimality"].size() == 3);

  auto lin = run_minimal(config({"X", "X^2"}, 300));
  CHECK(exit_code(lin) == kInconclusive);
}

TEST_CASE("group models from JSON") {
  const json quartic = {{"group", {{"build", "symmetric"}, {"n", 4}}},
                        {"blocks", json::array({{{"label", "f1"}, {"natural", true}},
                                                {{"label", "f2"}, {"subgroup", {{"build", "dihedral"}, {"n", 4}}}}})}};
  const auto m = build_model(quartic, perm::kDefaultCap);
  CHECK(m.group.order() == 24);
  REQUIRE(m.blocks.size() == 2);
  CHECK(m.blocks[1].size() == 3);

  JobConfig c;
  c.model = quartic.dump();
  auto r = run_group(c);
  CHECK(exit_code(r) == kPass);
  CHECK(r["certificate"]["minimal"] == true);

  c.model = json{{"group", {{"build", "cyclic"}, {"n", 3}}}}.dump();
  CHECK(exit_code(run_group(c)) == kFail);

  const json gens = {{"group", {{"build", "generators"}, {"degree", 3}, {"generators", {{1, 2, 0}, {1, 0, 2}}}}}};
  CHECK(build_model(gens, 100).group.order() == 6);
  CHECK_THROWS_AS(build_model(gens, 5), CapExceeded);
  CHECK_THROWS_AS(build_model({{"group", {{"build", "nope"}}}}, 100), DomainError);

  const json wreath = {{"group", {{"build", "wreath"}, {"base", {{"build", "symmetric"}, {"n", 3}}}, {"t", 2}}}};
  CHECK(build_model(wreath, perm::kDefaultCap).group.order() == 72);

  c.model = "{";
  CHECK_THROWS_AS(run_group(c), ParseError);
  JobConfig capped;
  capped.catalog = "m11-pair";
  capped.cap = 100;
  CHECK_THROWS_AS(run_group(capped), CapExceeded);
}

TEST_CASE("monodromy and catalog commands") {
  JobConfig c;
  c.catalog = "intro-triple";
  c.prime_bound = 1000;
  auto m = run_monodromy(c);
  CHECK(exit_code(m) == kPass);
  CHECK(m["consistency"]["coverage"] == 1.0);
  CHECK(m["cycle_types"].size() == 4);

  auto plain = run_monodromy(config({"X^2"}, 200));
  CHECK(plain["consistency"].is_null());
  CHECK(plain["cycle_types"].size() == 2);

  auto list = run_catalog(JobConfig{});
  CHECK(list["entries"].size() == catalog::entry_names().size());
  CHECK(exit_code(list) == kPass);
  auto one = run_catalog(c);
  CHECK(exit_code(one) == kPass);
}

TEST_CASE("samples follow the seed") {
  auto a = run_check(config({"X^2", "X^2+1", "1/(1-X^2)"}, 200));
  JobConfig s = config({"X^2", "X^2+1", "1/(1-X^2)"}, 200);
  s.seed = 3;
  auto b = run_check(s);
  CHECK(a["per_t0"] != b["per_t0"]);
  CHECK(a["per_t0"] == run_check(config({"X^2", "X^2+1", "1/(1-X^2)"}, 200))["per_t0"]);
}
