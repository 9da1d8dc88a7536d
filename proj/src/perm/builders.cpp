#include "locrep/perm/builders.hpp"

#include <numeric>

#include "locrep/errors.hpp"

namespace locrep::perm {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = r * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return r;
}

bool small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

Perm from_map(std::size_t n, const std::function<Point(Point)>& f) {
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) img[x] = f(x);
  return Perm(std::move(img));
}

void require_prime(std::uint32_t p) {
  if (!small_prime(p)) throw DomainError("expected a prime, got " + std::to_string(p));
}

}  // namespace

GroupSpec symmetric(std::size_t n) {
  if (n <= 1) return GroupSpec::generate(n, {});
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return GroupSpec::generate(n, std::move(gens));
}

GroupSpec alternating(std::size_t n) {
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return GroupSpec::generate(n, std::move(gens));
}

GroupSpec cyclic(std::size_t n) {
  if (n <= 1) return GroupSpec::generate(n, {});
  return GroupSpec::generate(n, {from_map(n, [n](Point x) { return static_cast<Point>((x + 1) % n); })});
}

GroupSpec dihedral(std::size_t n) {
  if (n <= 2) return symmetric(n);
  return GroupSpec::generate(n, {from_map(n, [n](Point x) { return static_cast<Point>((x + 1) % n); }),
                                 from_map(n, [n](Point x) { return static_cast<Point>((n - x) % n); })});
}

std::uint32_t primitive_root(std::uint32_t p) {
  require_prime(p);
  if (p == 2) return 1;
  const auto qs = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  throw DomainError("no primitive root");
}

GroupSpec agl1(std::uint32_t p) {
  require_prime(p);
  const std::uint32_t g = primitive_root(p);
  std::vector<Perm> gens{from_map(p, [p](Point x) { return static_cast<Point>((x + 1) % p); })};
  if (p > 2) gens.push_back(from_map(p, [p, g](Point x) { return static_cast<Point>(std::uint64_t{x} * g % p); }));
  return GroupSpec::generate(p, std::move(gens));
}

GroupSpec pgl2(std::uint32_t p) {
  require_prime(p);
  const std::uint32_t g = primitive_root(p);
  const Point inf = p;
  auto inv = [p](std::uint64_t x) { return powmod(x, p - 2, p); };
  return GroupSpec::generate(
      p + 1, {from_map(p + 1, [=](Point x) { return x == inf ? inf : static_cast<Point>((x + 1) % p); }),
              from_map(p + 1, [=](Point x) { return x == inf ? inf : static_cast<Point>(std::uint64_t{x} * g % p); }),
              from_map(p + 1, [=](Point x) {
                if (x == inf) return Point{0};
                if (x == 0) return inf;
                return static_cast<Point>((p - inv(x)) % p);
              })});
}

GroupSpec mathieu11() {
  return GroupSpec::generate(11, {Perm::from_cycles(11, {{1, 9}, {3, 10}, {4, 6}, {7, 8}}),
                                  Perm::from_cycles(11, {{0, 3, 2, 7}, {1, 4, 5, 8}})});
}

Fp2::Fp2(std::uint32_t prime) : p(prime) {
  require_prime(p);
  if (p == 2) throw DomainError("F_4 is not supported");
  // Smallest X^2 + c, so i^2 = -c.
  for (std::uint32_t c = 1; c < p; ++c)
    if (powmod(p - c, (p - 1) / 2, p) == p - 1) {
      nonresidue = p - c;
      break;
    }
}

std::uint32_t Fp2::add(std::uint32_t x, std::uint32_t y) const {
  return (x % p + y % p) % p + p * ((x / p + y / p) % p);
}

std::uint32_t Fp2::neg(std::uint32_t x) const { return (p - x % p) % p + p * ((p - x / p) % p); }

std::uint32_t Fp2::mul(std::uint32_t x, std::uint32_t y) const {
  const std::uint64_t u1 = x % p, v1 = x / p, u2 = y % p, v2 = y / p;
  const std::uint64_t u = (u1 * u2 + nonresidue * (v1 * v2 % p)) % p;
  const std::uint64_t v = (u1 * v2 + u2 * v1) % p;
  return static_cast<std::uint32_t>(u + p * v);
}

std::uint32_t Fp2::pow(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1U) r = mul(r, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return r;
}

std::uint32_t Fp2::generator() const {
  const std::uint64_t n = std::uint64_t{p} * p - 1;
  const auto qs = prime_factors(n);
  for (std::uint32_t x = 2; x < size(); ++x) {
    bool ok = true;
    for (auto q : qs)
      if (pow(x, n / q) == 1) ok = false;
    if (ok) return x;
  }
  throw DomainError("no generator of F_{p^2}^x");
}

bool Fp2::is_square(std::uint32_t x) const {
  return x == 0 || pow(x, (std::uint64_t{p} * p - 1) / 2) == 1;
}

Perm semilinear_perm(const Fp2& f, const Semilinear& s) {
  if (s.a == 0) throw DomainError("semilinear map needs a != 0");
  return from_map(f.size(), [&](Point x) {
    const std::uint32_t y = s.e ? f.frobenius(x) : x;
    return f.add(f.mul(s.a, y), s.b);
  });
}

Semilinear semilinear_decompose(const Fp2& f, const Perm& x) {
  if (x.degree() != f.size()) throw DomainError("degree mismatch");
  Semilinear s;
  s.b = x(0);
  s.a = f.add(x(1), f.neg(s.b));
  if (s.a == 0) throw DomainError("not semilinear");
  for (int e = 0; e < 2; ++e) {
    s.e = e;
    if (semilinear_perm(f, s) == x) return s;
  }
  throw DomainError("not semilinear");
}

GroupSpec agl1(const Fp2& f) {
  const std::uint32_t g = f.generator();
  return GroupSpec::generate(f.size(), {semilinear_perm(f, {1, 0, 1}), semilinear_perm(f, {1, 0, f.p}),
                                        semilinear_perm(f, {g, 0, 0})});
}

GroupSpec agammal1(const Fp2& f) {
  const std::uint32_t g = f.generator();
  return GroupSpec::generate(f.size(), {semilinear_perm(f, {1, 0, 1}), semilinear_perm(f, {1, 0, f.p}),
                                        semilinear_perm(f, {g, 0, 0}), semilinear_perm(f, {1, 1, 0})});
}

}  // namespace locrep::perm
