#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace locrep::perm {

using Point = std::uint32_t;

// Bijection of {0, ..., n-1} stored as its image array. Products act on the
// right: (a * b)(x) = b(a(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t n);
  // Cycles on {0..n-1}; points not mentioned are fixed.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm pow(long long k) const;
  // g^-1 * this * g
  Perm conjugate_by(const Perm& g) const;

  bool is_identity() const;
  std::vector<int> cycle_type() const;
  // Cycle type on the invariant range [begin, end).
  std::vector<int> cycle_type(Point begin, Point end) const;
  std::uint64_t order() const;
  int sign() const;
  bool fixes_point_in(Point begin, Point end) const;
  std::string to_string() const;  // cycle notation, "()" for the identity

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// n minus the number of cycles.
int ind(const Perm& s);

}  // namespace locrep::perm
