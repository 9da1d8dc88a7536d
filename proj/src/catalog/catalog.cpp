#include "locrep/catalog/catalog.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "locrep/catalog_data.hpp"
#include "locrep/cli/parse.hpp"
#include "locrep/errors.hpp"
#include "locrep/perm/builders.hpp"
#include "locrep/perm/lemmas.hpp"
#include "locrep/verify/verify.hpp"

namespace locrep::catalog {

using perm::GroupSpec;
using perm::MarkedAction;
using perm::Perm;
using perm::Point;

Poly chebyshev(int n) {
  if (n < 0) throw DomainError("Chebyshev index must be nonnegative");
  Poly prev = Poly::constant(1), cur = Poly::x();
  if (n == 0) return prev;
  const Poly two_x = Poly::x() * Rat(2);
  for (int k = 1; k < n; ++k) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatFunc redei(long p, const Rat& a) {
  if (p < 1) throw DomainError("Redei degree must be positive");
  if (a == 0 || (a > 0 && is_square(a))) throw DomainError("Redei parameter must not be a square");
  std::vector<Rat> num(static_cast<std::size_t>(p) + 1, Rat(0)), den(static_cast<std::size_t>(p), Rat(0));
  Rat apow = 1;
  for (long k = 0; k <= p; ++k) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    // s^k = a^(k/2) for even k, s * a^((k-1)/2) for odd k.
    if (k % 2 == 0) {
      num[static_cast<std::size_t>(p - k)] = Rat(binom) * apow;
    } else {
      den[static_cast<std::size_t>(p - k)] = Rat(binom) * apow;
      apow *= a;
    }
  }
  return RatFunc::make(Poly(num), Poly(den));
}

std::vector<RatFunc> CatalogEntry::rational_functions() const {
  std::vector<RatFunc> out;
  for (const auto& f : functions) out.push_back(f.f);
  return out;
}

bool EntryReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

Perm cycles(std::size_t n, const std::vector<std::vector<Point>>& c) { return Perm::from_cycles(n, c); }

std::uint32_t multiplier(const Perm& x, std::uint32_t p, Point shift = 0) {
  return (x(shift + 1) + p - x(shift)) % p;
}

int legendre(std::uint64_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

int block_sign(const Perm& x, const perm::Block& b) {
  int even = 0;
  for (int c : x.cycle_type(b.begin, b.end))
    if (c % 2 == 0) ++even;
  return even % 2 ? -1 : 1;
}

Perm restrict_to(const Perm& x, const perm::Block& b) {
  std::vector<Point> img;
  for (Point p = b.begin; p < b.end; ++p) img.push_back(x(p) - b.begin);
  return Perm(std::move(img));
}

// F_8 = F_2[w]/(w^3 + w + 1), elements as bit masks; infinity is point 8.
std::uint32_t f8_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  for (int i = 0; i < 3; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 4; i >= 3; --i)
    if (r >> i & 1) r ^= 0b1011u << (i - 3);
  return r;
}

std::uint32_t f8_inv(std::uint32_t a) {
  for (std::uint32_t b = 1; b < 8; ++b)
    if (f8_mul(a, b) == 1) return b;
  throw DomainError("zero has no inverse");
}

GroupSpec pgammal2_8() {
  auto make = [](auto fn) {
    std::vector<Point> img(9);
    for (Point x = 0; x < 9; ++x) img[x] = fn(x);
    return Perm(std::move(img));
  };
  const Perm shift = make([](Point x) { return x == 8 ? 8u : x ^ 1u; });
  const Perm scale = make([](Point x) { return x == 8 ? 8u : f8_mul(x, 2); });
  const Perm invert = make([](Point x) { return x == 8 ? 0u : x == 0 ? 8u : f8_inv(x); });
  const Perm frob = make([](Point x) { return x == 8 ? 8u : f8_mul(x, x); });
  return GroupSpec::generate(9, {shift, scale, invert, frob});
}

// A subgroup of the given order found from random pairs of elements.
GroupSpec random_subgroup(const GroupSpec& g, std::size_t order, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5bu};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    try {
      GroupSpec h = GroupSpec::generate(g.degree(), {g.element(pick(rng)), g.element(pick(rng))}, order);
      if (h.order() == order) return h;
    } catch (const CapExceeded&) {
    }
  }
  throw DomainError("no subgroup of order " + std::to_string(order) + " found");
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

// Entries backed by the fixture file.
struct Fixture {
  CatalogEntry entry;
  std::string model;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    const auto doc = nlohmann::json::parse(detail::kCatalogJson);
    for (const auto& e : doc.at("entries")) {
      Fixture fx;
      fx.entry.name = e.at("name").get<std::string>();
      fx.entry.note = e.at("note").get<std::string>();
      fx.entry.minimal = e.at("minimal").get<bool>();
      fx.entry.checks = e.at("checks").get<std::vector<std::string>>();
      fx.model = e.value("model", std::string());
      for (const auto& f : e.at("functions")) {
        FunctionSpec s;
        s.label = f.at("label").get<std::string>();
        s.f = cli::parse_ratfunc(f.at("expr").get<std::string>());
        s.degree = f.at("degree").get<int>();
        for (const auto& b : f.at("branch"))
          s.branch.push_back(ExpectedPoint{b.at("at").get<std::string>(), b.at("partition").get<ram::Partition>()});
        fx.entry.functions.push_back(std::move(s));
      }
      out.push_back(std::move(fx));
    }
    return out;
  }();
  return all;
}

std::function<MarkedAction()> named_model(const std::string& name) {
  if (name == "intro") return intro_model;
  if (name == "icosahedral-pair") return icosahedral_pair_model;
  if (name == "icosahedral-triple") return icosahedral_triple_model;
  if (name == "m11") return [] { return m11_model(); };
  if (name == "s6") return s6_model;
  if (name == "pgl28") {
    return [] {
      const GroupSpec g = pgammal2_8();
      const GroupSpec h = random_subgroup(g, 54, 0);
      return perm::append_coset_block(perm::natural_action(g, "f1"), h, "f2");
    };
  }
  if (name.empty()) return {};
  throw DomainError("unknown model " + name);
}

// "name(a,b)" -> name and the comma separated arguments.
std::pair<std::string, std::vector<std::string>> split_name(const std::string& full) {
  const auto open = full.find('(');
  if (open == std::string::npos) return {full, {}};
  if (full.back() != ')') throw DomainError("malformed entry name " + full);
  std::vector<std::string> args;
  std::string cur;
  for (char c : full.substr(open + 1, full.size() - open - 2)) {
    if (c == ',') {
      args.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  args.push_back(cur);
  return {full.substr(0, open), args};
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("expected an integer parameter, got '" + s + "'");
}

std::vector<ExpectedPoint> monomial_branch(int p) {
  return {{"0", {p}}, {"inf", {p}}};
}

std::vector<ExpectedPoint> chebyshev_branch(int p) {
  ram::Partition crit(static_cast<std::size_t>(p / 2), 2);
  if (p % 2) crit.push_back(1);
  return {{"-1", crit}, {"1", crit}, {"inf", {p}}};
}

FunctionSpec spec_of(std::string label, RatFunc f, std::vector<ExpectedPoint> branch) {
  FunctionSpec s;
  s.label = std::move(label);
  s.degree = f.degree();
  s.f = std::move(f);
  s.branch = std::move(branch);
  return s;
}

bool odd_prime(long p) { return p >= 3 && is_prime(static_cast<std::uint64_t>(p)); }

CatalogEntry chebyshev_monomial_entry(long p) {
  if (!odd_prime(p)) throw DomainError("chebyshev-monomial needs an odd prime");
  CatalogEntry e;
  e.name = "chebyshev-monomial(" + std::to_string(p) + ")";
  e.note = "X^p and T_p with the quadratic whose splitting field is fixed by equal multipliers";
  const int n = static_cast<int>(p);
  e.functions.push_back(spec_of("f1", RatFunc(Poly::x().pow(static_cast<unsigned>(p))), monomial_branch(n)));
  e.functions.push_back(spec_of("f2", RatFunc(chebyshev(n)), chebyshev_branch(n)));
  const Poly t = Poly::x();
  e.functions.push_back(
      spec_of("f3", ram::quadratic_companion(t * t - Poly::constant(1)), {{"-1", {2}}, {"1", {2}}}));
  e.model = [p] { return chebyshev_monomial_model(static_cast<std::uint32_t>(p)); };
  e.checks = {"degrees", "branch-data", "square-class", "scan",       "minimality",
              "certificate", "consistency", "singles-fail"};
  return e;
}

std::vector<long> redei_parameters(std::size_t r) {
  std::vector<long> d;
  for (long q = 2; d.size() < r; ++q)
    if (is_prime(static_cast<std::uint64_t>(q))) d.push_back(q);
  return d;
}

Poly many_redei_square_class(long p, std::size_t r) {
  Rat prod = 1;
  for (long d : redei_parameters(r)) prod *= d;
  return ram::quadratic_resolvent(RatFunc(chebyshev(static_cast<int>(p)))).representative() * prod;
}

CatalogEntry many_redei_entry(long p, long r) {
  if (!odd_prime(p) || p % 4 != 3) throw DomainError("many-redei needs a prime p = 3 mod 4");
  if (r < 2 || r % 2) throw DomainError("many-redei needs an even r >= 2");
  CatalogEntry e;
  e.name = "many-redei(" + std::to_string(p) + "," + std::to_string(r) + ")";
  e.note = "T_p, Redei functions twisted by distinct primes d_i, and the quadratic for d_1...d_r mu(t)";
  const int n = static_cast<int>(p);
  e.functions.push_back(spec_of("f0", RatFunc(chebyshev(n)), chebyshev_branch(n)));
  const auto ds = redei_parameters(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Poly t = Poly::x();
    const std::string piece = (t * t - Poly::constant(ds[i])).to_string('t');
    e.functions.push_back(spec_of("f" + std::to_string(i + 1), redei(p, ds[i]), {{piece, {n}}}));
  }
  e.functions.push_back(spec_of("f" + std::to_string(r + 1),
                                ram::quadratic_companion(many_redei_square_class(p, static_cast<std::size_t>(r))),
                                {{"-1", {2}}, {"1", {2}}}));
  e.model = [p, r] { return many_redei_model(static_cast<std::uint32_t>(p), static_cast<std::size_t>(r)); };
  // For p = 3 the product of the multipliers' signs is unconstrained and the
  // full product is the monodromy group; for larger p it is an overgroup.
  e.model_is_overgroup = p != 3;
  e.checks = {"degrees", "branch-data", "resolvent-product", "scan",       "minimality",
              "certificate", "consistency", "singles-fail"};
  return e;
}

bool has_s4_cycle_types(const RatFunc& f) {
  std::set<ram::Partition> seen;
  for (long t0 = 1; t0 <= 6; ++t0) {
    const auto obs = verify::sample_cycle_types({f}, t0, primes_up_to(300));
    if (!obs.unramified()) continue;
    for (const auto& po : obs.per_prime)
      if (!po.bad) seen.insert(po.partitions[0]);
  }
  return seen.size() == 5;
}

RatFunc quartic_f1(const Rat& a, const Rat& b) {
  const Poly x = Poly::x();
  return RatFunc(x.pow(4) + x * x * a + x * b);
}

RatFunc quartic_f2(const Rat& a, const Rat& b) {
  const Poly x = Poly::x();
  const Poly num = x.pow(3) + x * x * (2 * a) + x * (a * a) - Poly::constant(b * b);
  return RatFunc::make(-num, x * Rat(4));
}

CatalogEntry quartic_entry(const Rat& a, const Rat& b) {
  if (b == 0) throw DomainError("quartic-resolvent needs b != 0");
  CatalogEntry e;
  e.name = "quartic-resolvent(" + a.get_str() + "," + b.get_str() + ")";
  e.note = "a quartic with constant term -t and its cubic resolvent";
  auto f1 = spec_of("f1", quartic_f1(a, b), {});
  auto f2 = spec_of("f2", quartic_f2(a, b), {});
  if (a == 0 && b == 1) {
    f1.branch = {{"t^3 + 27/256", {2, 1, 1}}, {"inf", {4}}};
    f2.branch = {{"t^3 + 27/256", {2, 1}}, {"inf", {2, 1}}};
  }
  e.functions = {f1, f2};
  e.model = quartic_model;
  e.checks = {"degrees", "branch-data", "s4-evidence", "scan", "minimality", "certificate", "consistency",
              "singles-fail"};
  return e;
}

CatalogEntry thm56_entry(long p) {
  if (p != 3 && p != 5) throw DomainError("thm56-model is provided for p in {3, 5}");
  CatalogEntry e;
  e.name = "thm56-model(" + std::to_string(p) + ")";
  e.note = "AGammaL_1(F_p^2) with a twisted AGL_1(3) block, a sign block and an AGL_1(3) block";
  e.abstract = true;
  // Covered but not minimal: the twisted AGL_1(3) block can be dropped.
  e.minimal = false;
  e.model = [p] { return thm56_model(static_cast<std::uint32_t>(p)); };
  e.checks = {"frobenius-fixed-points", "coset-fpf", "certificate"};
  return e;
}

}  // namespace

MarkedAction intro_model() {
  GroupSpec v = GroupSpec::generate(6, {cycles(6, {{0, 1}, {4, 5}}), cycles(6, {{2, 3}, {4, 5}})});
  return MarkedAction{v, {{"f1", 0, 2}, {"f2", 2, 4}, {"f3", 4, 6}}};
}

MarkedAction quartic_model() {
  const GroupSpec d4 = GroupSpec::generate(4, {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 2}})});
  return perm::append_coset_block(perm::natural_action(perm::symmetric(4), "f1"), d4, "f2");
}

MarkedAction s6_model() {
  // PGL_2(5) on the projective line is a transitive S_5 inside S_6.
  auto a = perm::append_coset_block(perm::natural_action(perm::symmetric(6), "f1"), perm::pgl2(5), "f2");
  return perm::sign_character_action(a, perm::alternating(6), "f3");
}

namespace {

// S_5 on 5 points (f2), on the cosets of AGL_1(5) (f1) and of S_3 x S_2 (f3).
MarkedAction icosahedral_base() {
  const GroupSpec s5 = perm::symmetric(5);
  const GroupSpec s3s2 = GroupSpec::generate(5, {cycles(5, {{0, 1, 2}}), cycles(5, {{0, 1}}), cycles(5, {{3, 4}})});
  auto a = perm::append_coset_block(perm::natural_action(s5, "f2"), perm::agl1(5), "f1");
  return perm::append_coset_block(a, s3s2, "f3");
}

}  // namespace

MarkedAction icosahedral_pair_model() { return perm::restrict_blocks(icosahedral_base(), {"f1", "f3"}); }

MarkedAction icosahedral_triple_model() {
  const MarkedAction s5 = perm::restrict_blocks(icosahedral_base(), {"f1", "f2"});
  const perm::Block& nat = s5.block("f2");
  const GroupSpec even = perm::subgroup_where(s5.group, [&](const Perm& x) { return block_sign(x, nat) == 1; });
  const GroupSpec a = perm::agl1(5);
  const GroupSpec d5 = perm::subgroup_where(a, [](const Perm& x) {
    const auto m = multiplier(x, 5);
    return m == 1 || m == 4;
  });
  return perm::fibered_product(s5, perm::natural_action(a, "f3"), perm::character_map(s5.group, even),
                               perm::character_map(a, d5));
}

MarkedAction m11_model(std::uint64_t seed) {
  const GroupSpec m11 = perm::mathieu11();
  const GroupSpec psl = random_subgroup(m11, 660, seed);
  return perm::append_coset_block(perm::natural_action(m11, "f1"), psl, "f2");
}

MarkedAction chebyshev_monomial_model(std::uint32_t p) {
  const GroupSpec a = perm::agl1(p);
  const GroupSpec d = perm::subgroup_where(a, [p](const Perm& x) {
    const auto m = multiplier(x, p);
    return m == 1 || m == p - 1;
  });
  const auto q = perm::quotient_map(a, d);
  MarkedAction g = perm::fibered_product(perm::natural_action(a, "f1"), perm::natural_action(a, "f2"), q, q);
  const GroupSpec u =
      perm::subgroup_where(g.group, [p](const Perm& x) { return multiplier(x, p) == multiplier(x, p, p); });
  return perm::sign_character_action(g, u, "f3");
}

MarkedAction many_redei_model(std::uint32_t p, std::size_t r) {
  if (r < 2 || r % 2) throw DomainError("many-redei model needs an even r >= 2");
  std::vector<MarkedAction> factors;
  const GroupSpec a = perm::agl1(p);
  for (std::size_t i = 0; i <= r; ++i) factors.push_back(perm::natural_action(a, "f" + std::to_string(i)));
  MarkedAction prod = perm::direct_product_action(factors);
  // The quadratic block is fixed exactly when the multipliers have square product.
  const GroupSpec u = perm::subgroup_where(prod.group, [&](const Perm& x) {
    int s = 1;
    for (std::size_t i = 0; i <= r; ++i) s *= legendre(multiplier(x, p, static_cast<Point>(i * p)), p);
    return s == 1;
  });
  return perm::sign_character_action(prod, u, "f" + std::to_string(r + 1));
}

MarkedAction thm56_model(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(q) || q % 4 != 3) throw DomainError("q must be a prime = 3 mod 4");
  const perm::Fp2 field(p);
  const MarkedAction big = perm::natural_action(perm::agammal1(field), "f");
  const perm::Block fb = big.block("f");
  // sqrt(alpha) is fixed by the linear part, sqrt(beta) by square multipliers.
  auto semilinear = [&](const Perm& x, const perm::Block& b) {
    return perm::semilinear_decompose(field, restrict_to(x, b));
  };
  const GroupSpec linear = perm::subgroup_where(big.group, [&](const Perm& x) { return semilinear(x, fb).e == 0; });
  const GroupSpec agl = perm::agl1(q);
  const GroupSpec even = perm::subgroup_where(agl, [q](const Perm& x) { return legendre(multiplier(x, q), q) == 1; });
  const MarkedAction twisted = perm::fibered_product(big, perm::natural_action(agl, "f1"),
                                                     perm::character_map(big.group, linear),
                                                     perm::character_map(agl, even));
  const MarkedAction all = perm::direct_product_action({twisted, perm::natural_action(agl, "Tq")});
  const perm::Block fa = all.block("f"), tq = all.block("Tq");
  const GroupSpec u = perm::subgroup_where(all.group, [&](const Perm& x) {
    const int beta = field.is_square(semilinear(x, fa).a) ? 1 : -1;
    return beta * legendre(multiplier(x, q, tq.begin), q) == 1;
  });
  return perm::restrict_blocks(perm::sign_character_action(all, u, "f2"), {"f", "f1", "f2", "Tq"});
}

std::pair<Rat, Rat> quartic_default() {
  for (long h = 1; h <= 10; ++h)
    for (long a = 0; a <= h; ++a)
      for (long b : {h, -h}) {
        if (std::max(a, std::labs(b)) != h) continue;
        if (has_s4_cycle_types(quartic_f1(a, b))) return {Rat(a), Rat(b)};
      }
  throw DomainError("no quartic with S_4 cycle types found");
}

std::vector<std::string> entry_names() {
  return {"intro-triple",          "icosahedral-pair",      "icosahedral-triple",    "m11-pair",
          "pgl28-pair",            "quartic-resolvent",     "s6-triple",             "chebyshev-monomial(3)",
          "chebyshev-monomial(5)", "chebyshev-monomial(7)", "many-redei(3,2)",       "many-redei(7,2)",
          "thm56-model(3)",        "thm56-model(5)"};
}

CatalogEntry entry(const std::string& name) {
  for (const auto& fx : fixtures())
    if (fx.entry.name == name) {
      CatalogEntry e = fx.entry;
      e.model = named_model(fx.model);
      return e;
    }
  const auto [base, args] = split_name(name);
  if (base == "chebyshev-monomial") {
    if (args.size() > 1) throw DomainError("chebyshev-monomial takes one parameter");
    return chebyshev_monomial_entry(args.empty() ? 5 : parse_long(args[0]));
  }
  if (base == "many-redei") {
    if (args.size() != 0 && args.size() != 2) throw DomainError("many-redei takes two parameters");
    return args.empty() ? many_redei_entry(3, 2) : many_redei_entry(parse_long(args[0]), parse_long(args[1]));
  }
  if (base == "quartic-resolvent") {
    if (args.empty()) {
      const auto [a, b] = quartic_default();
      return quartic_entry(a, b);
    }
    if (args.size() != 2) throw DomainError("quartic-resolvent takes two parameters");
    try {
      return quartic_entry(cli::parse_rational(args[0]), cli::parse_rational(args[1]));
    } catch (const ParseError& err) {
      throw DomainError(std::string("bad quartic parameter: ") + err.what());
    }
  }
  if (base == "thm56-model") {
    if (args.size() > 1) throw DomainError("thm56-model takes one parameter");
    return thm56_entry(args.empty() ? 3 : parse_long(args[0]));
  }
  throw DomainError("unknown catalog entry " + name);
}

namespace {

struct Samples {
  std::vector<Rat> scan;
  std::vector<Rat> minimality;
};

CheckResult run_check(const std::string& check, const CatalogEntry& e, const std::optional<MarkedAction>& model,
                      const Samples& samples, const VerifyOptions& o) {
  CheckResult r;
  r.check = check;
  const auto fs = e.rational_functions();
  std::ostringstream detail;

  if (check == "degrees") {
    r.pass = true;
    for (const auto& f : e.functions) {
      detail << f.label << ':' << f.f.degree() << ' ';
      r.pass = r.pass && f.f.degree() == f.degree;
    }
  } else if (check == "branch-data") {
    r.pass = true;
    for (const auto& f : e.functions) {
      const auto cv = ram::critical_values(f.f);
      std::vector<ExpectedPoint> got;
      for (const auto& b : cv.points) got.push_back({b.label(), b.partition});
      const bool rh = ram::rh_verify(cv) == 0;
      bool match = true;
      if (!f.branch.empty()) {
        match = got.size() == f.branch.size();
        for (std::size_t i = 0; match && i < got.size(); ++i)
          match = got[i].at == f.branch[i].at && got[i].partition == f.branch[i].partition;
      }
      detail << f.label << ": " << got.size() << " branch points, rh " << (rh ? "ok" : "off")
             << (match ? "" : ", mismatch") << "; ";
      r.pass = r.pass && rh && match;
    }
  } else if (check == "branch-cycle-constraint") {
    const auto ms = perm::branch_cycle_constraint(perm::symmetric(5), cycles(5, {{0, 1, 2, 3, 4}}));
    detail << "5-cycle in S5: " << join(ms);
    r.pass = ms == std::vector<std::uint64_t>{1, 2, 3, 4};
  } else if (check == "m11-order") {
    const auto n = perm::mathieu11().order();
    detail << "order " << n;
    r.pass = n == 7920;
  } else if (check == "s4-evidence") {
    r.pass = has_s4_cycle_types(fs.at(0));
    detail << (r.pass ? "all five S4 cycle types observed" : "missing S4 cycle types");
  } else if (check == "square-class") {
    const Poly t = Poly::x();
    const auto d = ram::quadratic_resolvent(fs.at(2));
    const auto tp = ram::quadratic_resolvent(fs.at(1));
    detail << "f3 " << d.to_string() << ", T_p " << tp.to_string();
    r.pass = d == ram::square_class(t * t - Poly::constant(1));
  } else if (check == "resolvent-product") {
    const long p = fs.at(0).degree();
    const std::size_t rr = fs.size() - 2;
    const auto want = ram::square_class(many_redei_square_class(p, rr));
    const auto got = ram::quadratic_resolvent(fs.back());
    detail << "quadratic " << got.to_string() << ", wanted " << want.to_string();
    r.pass = got == want;
  } else if (check == "frobenius-fixed-points") {
    const std::uint32_t p = model->block("f").size() == 9 ? 3 : 5;
    const auto bad = perm::frobenius_exceptions(perm::Fp2(p));
    detail << bad << " elements outside the translations without exactly one fixed point";
    r.pass = bad == 0;
  } else if (check == "coset-fpf") {
    const auto& m = *model;
    const auto whole = perm::coset_fpf_check(m, m.group, m.group.identity());
    const perm::Fp2 field(m.block("f").size() == 9 ? 3 : 5);
    const perm::Block fb = m.block("f");
    const GroupSpec linear = perm::subgroup_where(
        m.group, [&](const Perm& x) { return perm::semilinear_decompose(field, restrict_to(x, fb)).e == 0; });
    // Elements moving sqrt(alpha) fix a point of the twisted AGL_1(q) block.
    std::optional<Perm> outside;
    for (const auto& x : m.group.elements())
      if (perm::semilinear_decompose(field, restrict_to(x, fb)).e == 1) {
        outside = x;
        break;
      }
    const auto moved = perm::coset_fpf_check(m, linear, *outside, {"f1"});
    detail << "order " << m.group.order() << ", covering " << (whole.all_fix ? "holds" : "fails")
           << ", semilinear coset fixes f1 points " << (moved.all_fix ? "always" : "not always");
    r.pass = whole.all_fix && moved.all_fix;
  } else if (check == "scan") {
    const auto agg = verify::check_locally_representing(fs, samples.scan, o.prime_bound);
    detail << agg.per_t0.size() << " samples, B = " << o.prime_bound;
    if (agg.witness) detail << ", witness t0 = " << agg.witness->t0.get_str() << " p = " << agg.witness->p;
    r.pass = agg.pass;
  } else if (check == "minimality") {
    const auto m = verify::check_minimality(fs, samples.minimality, o.minimality_bound);
    for (const auto& d : m.drops) {
      detail << "drop " << e.functions[d.index].label << ": ";
      if (d.witness)
        detail << "t0 = " << d.witness->t0.get_str() << " p = " << d.witness->p << "; ";
      else
        detail << "no witness; ";
    }
    r.pass = m.minimal() == e.minimal;
  } else if (check == "certificate") {
    const auto c = verify::certify_with_group(*model);
    detail << "order " << model->group.order() << (c.covered ? ", covered" : ", not covered")
           << (c.minimal ? ", minimal" : ", not minimal");
    r.pass = c.covered && c.minimal == e.minimal;
  } else if (check == "consistency") {
    std::vector<verify::CycleTypeObservation> obs;
    const auto primes = primes_up_to(o.consistency_bound);
    for (const auto& t0 : samples.scan) obs.push_back(verify::sample_cycle_types(fs, t0, primes));
    const auto c = verify::group_consistency(obs, *model);
    detail << "observed " << c.observed << " of " << c.model << " cycle-type tuples, B = " << o.consistency_bound;
    r.pass = c.subset_ok && (e.model_is_overgroup || c.coverage >= 0.9);
    if (!c.subset_ok) detail << ", " << c.unexplained.size() << " tuples outside the model";
  } else if (check == "singles-fail") {
    r.pass = true;
    for (const auto& f : e.functions) {
      if (f.f.degree() < 2) continue;
      const auto agg = verify::check_locally_representing({f.f}, samples.scan, o.prime_bound);
      if (agg.pass) {
        r.pass = false;
        detail << f.label << " passes alone; ";
      }
    }
    if (r.pass) detail << "every function fails on its own";
  } else {
    throw DomainError("unknown check " + check);
  }
  r.detail = detail.str();
  return r;
}

}  // namespace

EntryReport entry_verify(const std::string& name, const VerifyOptions& options) {
  const CatalogEntry e = entry(name);
  EntryReport report;
  report.name = e.name;
  std::optional<MarkedAction> model;
  if (e.model) model = e.model();
  Samples samples;
  if (!e.functions.empty()) {
    const auto critical = verify::rational_critical_values(e.rational_functions());
    samples.scan = verify::default_t0_samples_from(critical, options.t0_samples, options.seed);
    samples.minimality = verify::default_t0_samples_from(critical, options.minimality_samples, options.seed);
  }
  std::vector<std::future<CheckResult>> jobs;
  for (const auto& c : e.checks)
    jobs.push_back(std::async(std::launch::async, [&, c] { return run_check(c, e, model, samples, options); }));
  for (auto& j : jobs) report.checks.push_back(j.get());
  return report;
}

}  // namespace locrep::catalog
