#include "locrep/ramification/ramification.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "locrep/errors.hpp"
#include "locrep/exact/algebraic.hpp"

namespace locrep::ram {

int ind(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0) - static_cast<int>(p.size());
}

bool is_trivial(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int e) { return e == 1; });
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::string BranchPoint::label() const {
  switch (kind) {
    case Kind::Rational: return value.get_str();
    case Kind::Infinity: return "inf";
    case Kind::Algebraic: return factor.to_string('t');
  }
  return {};
}

namespace {

Partition sorted(Partition p) {
  std::sort(p.rbegin(), p.rend());
  return p;
}

Partition finite_partition(const RatFunc& f, const Rat& t0) {
  const Poly fib = f.fiber(t0);
  Partition p = fib.degree() > 0 ? root_multiplicities(fib) : Partition{};
  const int drop = f.degree() - std::max(fib.degree(), 0);
  if (drop > 0) p.push_back(drop);
  return sorted(p);
}

Partition infinity_partition(const RatFunc& f) {
  Partition p = f.den().degree() > 0 ? root_multiplicities(f.den()) : Partition{};
  const int excess = f.num().degree() - f.den().degree();
  if (excess > 0) p.push_back(excess);
  return sorted(p);
}

}  // namespace

Poly formal_discriminant(const RatFunc& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("formal discriminant of a constant");
  if (n == 1) return Poly::constant(1);
  const auto [num, den] = integer_pair(f);
  const std::size_t need = 2 * static_cast<std::size_t>(n) - 1;
  std::vector<Rat> xs, ys;
  for (long k = 0; xs.size() < need; ++k) {
    // 0, 1, -1, 2, -2, ...
    const Rat t0 = k % 2 ? Rat((k + 1) / 2) : Rat(-(k / 2));
    const Poly fib = num - den * t0;
    if (fib.degree() != n) continue;
    xs.push_back(t0);
    ys.push_back(discriminant(fib));
  }
  return interpolate(xs, ys);
}

Partition multiplicity_partition(const RatFunc& f, const ProjRat& t0) {
  return t0.is_infinity() ? infinity_partition(f) : finite_partition(f, t0.value());
}

std::vector<std::pair<Poly, Partition>> multiplicity_partition(const RatFunc& f, const Poly& phi) {
  const int n = f.degree();
  const Poly t = Poly::x();
  return dynamic_evaluate(phi, [&](const ResidueRing& ring) {
    RingPoly fib(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) fib[k] = ring.reduce(Poly::constant(f.num()[k]) - t * f.den()[k]);
    const int d = ring_degree(ring, fib);
    fib.resize(static_cast<std::size_t>(std::max(d, 0)) + 1);
    Partition p = d > 0 ? root_multiplicities(ring, fib) : Partition{};
    if (n - std::max(d, 0) > 0) p.push_back(n - std::max(d, 0));
    return sorted(p);
  });
}

BranchData critical_values(const RatFunc& f) {
  BranchData data;
  data.degree = f.degree();
  if (data.degree < 2) {
    data.branch_polynomial = Poly::constant(1);
    return data;
  }
  data.branch_polynomial = primitive_part(squarefree_part(formal_discriminant(f)));
  Poly rest = data.branch_polynomial;
  for (const Rat& r : rational_roots(data.branch_polynomial)) {
    BranchPoint b;
    b.kind = BranchPoint::Kind::Rational;
    b.value = r;
    b.partition = finite_partition(f, r);
    data.points.push_back(std::move(b));
    rest = rest / Poly{-r, 1};
  }
  if (rest.degree() > 0) {
    auto pieces = multiplicity_partition(f, rest);
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
      if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
      return a.first.coeffs() < b.first.coeffs();
    });
    for (auto& [piece, part] : pieces) {
      BranchPoint b;
      b.kind = BranchPoint::Kind::Algebraic;
      b.factor = piece;
      b.partition = part;
      data.points.push_back(std::move(b));
    }
  }
  BranchPoint inf;
  inf.kind = BranchPoint::Kind::Infinity;
  inf.partition = infinity_partition(f);
  data.infinity_is_branch = !is_trivial(inf.partition);
  if (data.infinity_is_branch) data.points.push_back(std::move(inf));
  return data;
}

long rh_verify(const std::vector<Partition>& partitions, int n) {
  long total = 0;
  for (const auto& p : partitions) total += ind(p);
  return total - (2L * n - 2);
}

long rh_verify(const BranchData& data) {
  long total = 0;
  for (const auto& b : data.points) total += static_cast<long>(b.count()) * ind(b.partition);
  return total - (2L * data.degree - 2);
}

TupleVerdict verify_branch_cycle_tuple(const std::vector<perm::Perm>& sigmas) {
  TupleVerdict v;
  if (sigmas.empty()) return v;
  const std::size_t n = sigmas.front().degree();
  perm::Perm prod = perm::Perm::identity(n);
  for (const auto& s : sigmas) {
    if (s.degree() != n) throw DomainError("branch cycles of different degrees");
    prod = prod * s;
  }
  v.product_identity = prod.is_identity();
  // Orbits of the generated group by union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& s : sigmas)
    for (perm::Point x = 0; x < n; ++x) {
      auto a = find(x), b = find(s(x));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  v.transitive = components <= 1;
  long total = 0;
  for (const auto& s : sigmas) total += perm::ind(s);
  v.rh_deficit = total - (2L * static_cast<long>(n) - 2);
  return v;
}

Rat galois_closure_genus(std::uint64_t order, const std::vector<int>& indices) {
  if (order < 1) throw DomainError("group order must be positive");
  Rat s = -2;
  for (int e : indices) {
    if (e < 2) throw DomainError("ramification indices must be at least 2");
    s += 1 - Rat(1, e);
  }
  return 1 + Rat(static_cast<unsigned long>(order)) * s / 2;
}

std::string SquareClass::to_string() const {
  return constant.get_str() + "*(" + part.to_string('t') + ")";
}

SquareClass square_class(const Poly& d) {
  if (d.is_zero()) throw DomainError("square class of zero");
  Poly odd = Poly::constant(1);
  const auto parts = squarefree_decomposition(d);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd *= parts[i];
  SquareClass c;
  c.part = primitive_part(odd);
  // d / part = k * (square of a monic polynomial), k = lc(d) / lc(part).
  const Rat k = d.lc() / c.part.lc();
  c.constant = squarefree_kernel(Int(k.get_num() * k.get_den()));
  return c;
}

SquareClass quadratic_resolvent(const RatFunc& f) {
  if (f.degree() < 2) throw DomainError("quadratic resolvent needs degree at least 2");
  return square_class(formal_discriminant(f));
}

namespace {

RatFunc companion_from_point(const Rat& c, const Rat& beta, const Rat& a2, const Rat& y) {
  const Poly x = Poly::x();
  const Poly g = Poly::constant(a2) * x * x + Poly::constant(2 * y) * x + Poly::constant(c * (beta + a2));
  const Poly h = x * x - Poly::constant(c);
  return RatFunc::make(g, h);
}

}  // namespace

RatFunc quadratic_companion(const Poly& d) {
  if (d.degree() < 1 || d.degree() > 2) throw DomainError("companion needs degree 1 or 2");
  if (squarefree_part(d).degree() != d.degree()) throw DomainError("companion needs a squarefree polynomial");
  const Poly x = Poly::x();
  if (d.degree() == 1) {
    // d = a (t - alpha)  ->  alpha + a X^2
    const Rat a = d.lc(), alpha = -d[0] / d.lc();
    return RatFunc(Poly::constant(alpha) + Poly::constant(a) * x * x);
  }
  const Rat c = d.lc(), beta = d[1] / c, gamma = d[0] / c;
  // Points of y^2 = c (a^2 + beta a + gamma) with y != 0.
  auto attempt = [&](const Rat& a2) -> std::optional<RatFunc> {
    const Rat v = c * (a2 * a2 + beta * a2 + gamma);
    if (v <= 0 || !is_square(v)) return std::nullopt;
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
    RatFunc f = companion_from_point(c, beta, a2, Rat(num, den));
    if (f.degree() != 2) return std::nullopt;
    return f;
  };
  if (is_square(c)) {
    // y = s a + m meets the conic in a second rational point.
    Int s;
    mpz_sqrt(s.get_mpz_t(), Rat(c.get_num() * c.get_den()).get_num_mpz_t());
    const Rat root = Rat(s) / c.get_den();
    for (long m = 1; m < 64; ++m) {
      const Rat denom = c * beta - 2 * root * m;
      if (denom == 0) continue;
      if (auto f = attempt((Rat(m * m) - c * gamma) / denom)) return *f;
    }
  }
  constexpr long kHeight = 60;
  if (auto f = attempt(Rat(0))) return *f;
  for (long h = 1; h <= kHeight; ++h)
    for (long q = 1; q <= h; ++q)
      for (long p = -h; p <= h; ++p) {
        if (std::max(std::labs(p), q) != h || std::gcd(std::labs(p), q) != 1) continue;
        if (auto f = attempt(Rat(p, q))) return *f;
      }
  throw NoRationalPoint("no rational point of height <= " + std::to_string(kHeight) + " on y^2 = " +
                        d.to_string('a'));
}

}  // namespace locrep::ram
