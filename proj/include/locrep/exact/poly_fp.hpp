#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "locrep/exact/poly.hpp"

namespace locrep {

// Dense polynomial over F_p, p < 2^63, coefficients lowest degree first.
class PolyFp {
 public:
  using u64 = std::uint64_t;

  explicit PolyFp(u64 p) : p_(p) {}
  PolyFp(u64 p, std::vector<u64> coeffs);

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 lc() const { return c_.back(); }
  u64 operator()(u64 x) const;

  PolyFp derivative() const;
  PolyFp monic() const;

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  friend bool operator==(const PolyFp& a, const PolyFp& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string() const;

  u64 mul(u64 a, u64 b) const {
    if (p_ <= 0xffffffffULL) return a * b % p_;
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p_);
  }
  u64 inv(u64 a) const;

 private:
  void trim();
  u64 p_;
  std::vector<u64> c_;
};

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
PolyFp gcd(const PolyFp& a, const PolyFp& b);
// base^e mod m.
PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& m);

// Throws BadPrime when a denominator or the leading coefficient vanishes mod p.
PolyFp reduce_mod_p(const Poly& a, std::uint64_t p);

bool is_squarefree(const PolyFp& a);
// Degrees of the irreducible factors, descending, by distinct-degree
// factorization. Throws DomainError on non-squarefree input.
std::vector<int> degree_partition_mod_p(const PolyFp& a);
bool has_root_mod_p(const PolyFp& a);

}  // namespace locrep
