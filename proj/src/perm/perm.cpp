#include "locrep/perm/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "locrep/errors.hpp"

namespace locrep::perm {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x]) throw DomainError("image array is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) throw DomainError("invalid cycle notation");
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result = identity(degree());
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Perm Perm::conjugate_by(const Perm& g) const { return g.inverse() * *this * g; }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type(Point begin, Point end) const {
  std::vector<int> out;
  std::vector<bool> seen(end - begin, false);
  for (Point s = begin; s < end; ++s) {
    if (seen[s - begin]) continue;
    int len = 0;
    for (Point x = s; !seen[x - begin]; x = img_[x]) {
      seen[x - begin] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> Perm::cycle_type() const { return cycle_type(0, static_cast<Point>(degree())); }

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (int c : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(c));
  return o;
}

int Perm::sign() const {
  int even_cycles = 0;
  for (int c : cycle_type())
    if (c % 2 == 0) ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

bool Perm::fixes_point_in(Point begin, Point end) const {
  for (Point x = begin; x < end; ++x)
    if (img_[x] == x) return true;
  return false;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point s = 0; s < degree(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    any = true;
    os << '(';
    for (Point x = s; !seen[x]; x = img_[x]) {
      seen[x] = true;
      if (x != s) os << ' ';
      os << x;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int ind(const Perm& s) { return static_cast<int>(s.degree()) - static_cast<int>(s.cycle_type().size()); }

}  // namespace locrep::perm
