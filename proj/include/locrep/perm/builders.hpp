#pragma once

#include <cstdint>

#include "locrep/perm/group.hpp"

namespace locrep::perm {

GroupSpec symmetric(std::size_t n);
GroupSpec alternating(std::size_t n);
GroupSpec cyclic(std::size_t n);
// Dihedral group of order 2n on n points.
GroupSpec dihedral(std::size_t n);
// x -> a x + b on Z/p, p prime.
GroupSpec agl1(std::uint32_t p);
// x -> (a x + b) / (c x + d) on P^1(F_p), with infinity as point p.
GroupSpec pgl2(std::uint32_t p);
GroupSpec mathieu11();

std::uint32_t primitive_root(std::uint32_t p);

// F_{p^2} = F_p[i]/(i^2 + c) for the least c making it a field; u + v i is
// stored as point u + p v.
struct Fp2 {
  std::uint32_t p = 0;
  std::uint32_t nonresidue = 0;

  explicit Fp2(std::uint32_t prime);
  std::uint32_t size() const { return p * p; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t x) const { return pow(x, p); }
  std::uint32_t generator() const;  // of the multiplicative group
  bool is_square(std::uint32_t x) const;
};

// x -> a x^(p^e) + b with a != 0, e in {0, 1}.
struct Semilinear {
  std::uint32_t a = 1;
  int e = 0;
  std::uint32_t b = 0;
};

GroupSpec agammal1(const Fp2& f);
GroupSpec agl1(const Fp2& f);
Perm semilinear_perm(const Fp2& f, const Semilinear& s);
// Throws DomainError if x is not semilinear.
Semilinear semilinear_decompose(const Fp2& f, const Perm& x);

}  // namespace locrep::perm
