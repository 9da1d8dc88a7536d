#include "locrep/exact/poly_fp.hpp"

#include <algorithm>
#include <sstream>

#include "locrep/errors.hpp"

namespace locrep {

namespace {

// a, b < p < 2^63.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

}  // namespace

PolyFp::PolyFp(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp::u64 PolyFp::operator()(u64 x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul(acc, x) + *it) % p_;
  return acc;
}

PolyFp::u64 PolyFp::inv(u64 a) const {
  // Fermat inversion.
  u64 result = 1, base = a % p_, e = p_ - 2;
  if (base == 0) throw DomainError("inverse of zero in F_p");
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

PolyFp PolyFp::derivative() const {
  std::vector<u64> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul(c_[i], i % p_));
  return PolyFp(p_, std::move(d));
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  const u64 s = inv(lc());
  std::vector<u64> v = c_;
  for (auto& c : v) c = mul(c, s);
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  std::vector<u64> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = add_mod(v[i], o.c_[i], p_);
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  std::vector<u64> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = add_mod(v[i], p_ - o.c_[i], p_);
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  if (is_zero() || o.is_zero()) return PolyFp(p_);
  std::vector<u64> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = add_mod(v[i + j], mul(c_[i], o.c_[j]), p_);
  }
  return PolyFp(p_, std::move(v));
}

std::string PolyFp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c_[k] != 1) os << c_[k];
    if (k > 0 && c_[k] != 1) os << '*';
    if (k > 0) os << 'X';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto p = a.modulus();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const int db = b.degree();
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const auto inv = b.inv(b.lc());
  const auto& bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto coef = b.mul(r[k + db], inv);
    q[k] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] = add_mod(r[k + j], p - b.mul(coef, bc[j]), p);
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& m) {
  PolyFp result(m.modulus(), {1});
  result = divmod(result, m).second;
  PolyFp b = divmod(base, m).second;
  while (e) {
    if (e & 1U) result = divmod(result * b, m).second;
    e >>= 1U;
    if (e) b = divmod(b * b, m).second;
  }
  return result;
}

PolyFp reduce_mod_p(const Poly& a, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(rat_mod_p(c, p));
  PolyFp out(p, std::move(v));
  if (out.degree() != a.degree())
    throw BadPrime("leading coefficient vanishes modulo " + std::to_string(p));
  return out;
}

bool is_squarefree(const PolyFp& a) {
  if (a.degree() <= 0) return true;
  return gcd(a, a.derivative()).degree() == 0;
}

namespace {

// Rows x^(j p) mod f for j < deg f, so that h^p mod f is a matrix-vector product.
std::vector<PolyFp> frobenius_rows(const PolyFp& f) {
  const auto p = f.modulus();
  const PolyFp xp = powmod(PolyFp(p, {0, 1}), p, f);
  std::vector<PolyFp> rows{divmod(PolyFp(p, {1}), f).second};
  for (int j = 1; j < f.degree(); ++j) rows.push_back(divmod(rows.back() * xp, f).second);
  return rows;
}

PolyFp apply_frobenius(const std::vector<PolyFp>& rows, const PolyFp& h) {
  const auto p = h.modulus();
  std::vector<unsigned __int128> acc(rows.size(), 0);
  for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
    const auto hj = h.coeffs()[j];
    if (hj == 0) continue;
    const auto& r = rows[j].coeffs();
    for (std::size_t i = 0; i < r.size(); ++i) acc[i] += h.mul(hj, r[i]);
  }
  std::vector<std::uint64_t> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<std::uint64_t>(acc[i] % p);
  return PolyFp(p, std::move(v));
}

}  // namespace

std::vector<int> degree_partition_mod_p(const PolyFp& a) {
  if (a.is_zero()) throw DomainError("partition of zero polynomial");
  if (!is_squarefree(a)) throw DomainError("degree partition needs a squarefree polynomial");
  const auto p = a.modulus();
  std::vector<int> parts;
  PolyFp f = a.monic();
  const PolyFp x(p, {0, 1});
  PolyFp h = divmod(x, f).second;
  std::vector<PolyFp> rows = f.degree() >= 2 ? frobenius_rows(f) : std::vector<PolyFp>{};
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = apply_frobenius(rows, h);
    PolyFp g = gcd(h - x, f);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / i; ++k) parts.push_back(i);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
      rows.erase(rows.begin() + std::max(f.degree(), 0), rows.end());
      for (auto& r : rows) r = divmod(r, f).second;
    }
  }
  if (f.degree() > 0) parts.push_back(f.degree());
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

bool has_root_mod_p(const PolyFp& a) {
  if (a.degree() < 1) return false;
  const PolyFp f = a.monic();
  const PolyFp x(a.modulus(), {0, 1});
  PolyFp xp = powmod(x, a.modulus(), f);
  return gcd(xp - x, f).degree() > 0;
}

}  // namespace locrep
