#include "locrep/exact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "locrep/errors.hpp"

namespace locrep {

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int k) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

const Rat& Poly::lc() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rat inv = 1 / lc();
  return r *= inv;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::reversal(int n) const {
  std::vector<Rat> v(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= degree(); ++i) v[n - i] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::taylor_shift(const Rat& r) const {
  std::vector<Rat> v = c_;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) v[j] += r * v[j + 1];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  Rat inv = 1 / b.lc();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat coef = r[k + db] * inv;
    q[k] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= coef * bc[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree_part(const Poly& a) {
  if (a.is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (a.degree() == 0) return Poly::constant(1);
  return (a / gcd(a, a.derivative())).monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
  // Yun's algorithm.
  std::vector<Poly> parts;
  if (a.degree() == 0) return parts;
  Poly f = a.monic();
  Poly d = f.derivative();
  Poly g = gcd(f, d);
  Poly b = f / g;
  Poly c = d / g;
  Poly e = c - b.derivative();
  while (b.degree() > 0) {
    Poly h = gcd(b, e);
    parts.push_back(h);
    b = b / h;
    c = e / h;
    e = c - b.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

std::vector<int> root_multiplicities(const Poly& a) {
  std::vector<int> out;
  auto parts = squarefree_decomposition(a);
  for (std::size_t i = parts.size(); i-- > 0;)
    for (int k = 0; k < parts[i].degree(); ++k) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Rat resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw DomainError("resultant with zero polynomial");
  Poly a = a0, b = b0;
  Rat acc = 1;
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * rpow(b.lc(), static_cast<unsigned long>(m));
    if (m == 0) return acc * rpow(a.lc(), static_cast<unsigned long>(n));
    Poly r = a % b;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= rpow(b.lc(), static_cast<unsigned long>(m - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

Rat discriminant(const Poly& a) {
  const int n = a.degree();
  if (n < 1) throw DomainError("discriminant of a constant");
  if (n == 1) return 1;
  Rat d = resultant(a, a.derivative()) / a.lc();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

Poly primitive_part(const Poly& a) {
  if (a.is_zero()) return a;
  Int den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> ints;
  Int g = 0;
  for (const auto& c : a.coeffs()) {
    Int v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  return from_integers(ints);
}

std::vector<Int> integer_coefficients(const Poly& a) {
  std::vector<Int> out;
  for (const auto& c : a.coeffs()) {
    if (c.get_den() != 1) throw DomainError("polynomial is not integral");
    out.emplace_back(c.get_num());
  }
  return out;
}

Poly from_integers(const std::vector<Int>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

namespace {

Int eval_int(const std::vector<Int>& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Int> deriv_int(const std::vector<Int>& f) {
  std::vector<Int> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& a) {
  if (a.is_zero()) throw DomainError("roots of zero polynomial");
  std::vector<Rat> roots;
  Poly f = squarefree_part(a);
  if (f.degree() >= 1 && f[0] == 0) {
    roots.emplace_back(0);
    f = f / Poly::x();
  }
  if (f.degree() < 1) return roots;
  f = primitive_part(f);
  if (f.degree() == 1) {
    roots.push_back(-f[0] / f[1]);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const auto F = integer_coefficients(f);
  const auto dF = deriv_int(F);
  const Int lc = F.back();
  const Rat disc = discriminant(f);
  const Int disc_num(disc.get_num());
  std::uint64_t p = 3;
  while (mpz_divisible_ui_p(lc.get_mpz_t(), p) || mpz_divisible_ui_p(disc_num.get_mpz_t(), p)) {
    do {
      p += 2;
    } while (!is_prime(p));
  }
  // A root a/b has b | lc and a | F(0), so lc * a / b is an integer of size
  // at most |lc * F(0)|.
  const Int bound = 2 * abs(lc) * abs(F.front()) + 1;
  const Int P(static_cast<unsigned long>(p));
  for (std::uint64_t r0 = 0; r0 < p; ++r0) {
    Int r(static_cast<unsigned long>(r0));
    if (mpz_divisible_ui_p(Int(eval_int(F, r)).get_mpz_t(), p) == 0) continue;
    Int modulus = P;
    while (modulus <= bound) {
      modulus *= modulus;
      Int fr = mod_floor(eval_int(F, r), modulus);
      Int dr = mod_floor(eval_int(dF, r), modulus);
      Int inv;
      mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), modulus.get_mpz_t());
      r = mod_floor(r - fr * inv, modulus);
    }
    Int y = mod_floor(lc * r, modulus);
    if (2 * y > modulus) y -= modulus;
    Rat cand(y, lc);
    cand.canonicalize();
    if (f(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc *= Poly{-xs[k], 1};
    acc += Poly::constant(dd[k]);
  }
  return acc;
}

}  // namespace locrep
