#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locrep/exact/ratfunc.hpp"
#include "locrep/perm/perm.hpp"

namespace locrep::ram {

// Multiplicities of the points in a fiber, descending.
using Partition = std::vector<int>;

int ind(const Partition& p);
bool is_trivial(const Partition& p);
std::string to_string(const Partition& p);

// A branch point of f: a rational value, infinity, or the roots of a factor
// of the branch polynomial with no rational root.
struct BranchPoint {
  enum class Kind { Rational, Infinity, Algebraic };
  Kind kind = Kind::Rational;
  Rat value;
  Poly factor;  // monic, Algebraic only
  Partition partition;

  // Number of geometric branch points this entry stands for.
  int count() const { return kind == Kind::Algebraic ? factor.degree() : 1; }
  std::string label() const;  // "1728", "inf", "t^2 - 2"
};

struct BranchData {
  int degree = 0;
  // Primitive, squarefree, positive leading coefficient; in the variable t.
  Poly branch_polynomial;
  bool infinity_is_branch = false;
  // Rational points ascending, then algebraic pieces, then infinity.
  std::vector<BranchPoint> points;
};

// disc_X(g(X) - t h(X)) with formal X-degree deg f, where f = g/h and g, h
// have integer coefficients with overall content 1.
Poly formal_discriminant(const RatFunc& f);
BranchData critical_values(const RatFunc& f);

// Partition of the fiber over t0, including the point at infinity.
Partition multiplicity_partition(const RatFunc& f, const ProjRat& t0);
// Partitions at the roots of `phi`, one per piece of a factorization of phi
// found while evaluating.
std::vector<std::pair<Poly, Partition>> multiplicity_partition(const RatFunc& f, const Poly& phi);

// Sum of n - #parts over the partitions, minus 2n - 2.
long rh_verify(const std::vector<Partition>& partitions, int n);
// rh_verify over every branch point of f, counting algebraic ones per root.
long rh_verify(const BranchData& data);

struct TupleVerdict {
  bool product_identity = false;
  bool transitive = false;
  long rh_deficit = 0;
  bool valid() const { return product_identity && transitive && rh_deficit == 0; }
};
TupleVerdict verify_branch_cycle_tuple(const std::vector<perm::Perm>& sigmas);

// g with 2g - 2 = order (-2 + sum(1 - 1/e_i)).
Rat galois_closure_genus(std::uint64_t order, const std::vector<int>& indices);

// The class of constant * part modulo nonzero squares of Q(t): constant is an
// integer with small square factors removed, part is primitive, squarefree,
// with positive leading coefficient.
struct SquareClass {
  Int constant;
  Poly part;

  Poly representative() const { return part * Rat(constant); }
  std::string to_string() const;
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.part == b.part && is_square(Int(a.constant * b.constant));
  }
};
SquareClass square_class(const Poly& d);
SquareClass quadratic_resolvent(const RatFunc& f);

// A degree-2 rational function whose resolvent is the class of d
// (nonconstant, squarefree, degree <= 2). Throws NoRationalPoint if the conic
// y^2 = d(a) has no point of small height, DomainError on bad input.
RatFunc quadratic_companion(const Poly& d);

}  // namespace locrep::ram
