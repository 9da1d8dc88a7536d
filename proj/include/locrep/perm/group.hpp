#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locrep/perm/perm.hpp"

namespace locrep::perm {

inline constexpr std::size_t kDefaultCap = 2'000'000;

// Finite permutation group with its full element list, sorted
// lexicographically by image array (the identity comes first).
class GroupSpec {
 public:
  // Breadth-first closure; throws CapExceeded past `cap` elements.
  static GroupSpec generate(std::size_t degree, std::vector<Perm> generators,
                            std::size_t cap = kDefaultCap);
  // `elements` must be closed under products; it is sorted and deduplicated.
  static GroupSpec from_closed(std::size_t degree, std::vector<Perm> generators,
                               std::vector<Perm> elements);
  // Elements given only, generators chosen greedily.
  static GroupSpec from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const Perm& identity() const { return elements_.front(); }

  std::optional<std::size_t> index_of(const Perm& p) const;
  std::size_t require_index(const Perm& p) const;  // throws DomainError
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
};

std::vector<std::vector<Point>> orbits(const GroupSpec& g);
bool is_transitive(const GroupSpec& g);
GroupSpec point_stabilizer(const GroupSpec& g, Point pt);
// Elements satisfying `pred`; throws DomainError unless they form a subgroup.
GroupSpec subgroup_where(const GroupSpec& g, const std::function<bool(const Perm&)>& pred);
GroupSpec conjugate(const GroupSpec& h, const Perm& g);
bool is_subgroup(const GroupSpec& g, const GroupSpec& h);
bool is_normal(const GroupSpec& g, const GroupSpec& n);
bool is_simple(const GroupSpec& g);

// Class index of each element (by position in g.elements()) and the class count.
struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;
  std::size_t count = 0;
};
ConjugacyClasses conjugacy_classes(const GroupSpec& g);

// Representatives of the conjugacy classes of subgroups generated by at most
// two elements, ordered by size.
std::vector<GroupSpec> subgroups_up_to_conjugacy(const GroupSpec& g);

struct SubsetWitness {
  std::string dropped;
  std::optional<Perm> witness;
};

struct CoverReport {
  bool covered = false;
  std::optional<Perm> witness;
  bool minimal = false;
  std::vector<SubsetWitness> per_subset;
};

// Whether every element lies in a conjugate of some subgroup; otherwise the
// least uncovered element. Throws DomainError on a non-proper subgroup.
CoverReport normal_covering_check(const GroupSpec& g, const std::vector<GroupSpec>& subgroups);

// {m in (Z/eZ)^x : s^m conjugate to s in A}, e = order(s).
std::vector<std::uint64_t> branch_cycle_constraint(const GroupSpec& a, const Perm& s);

}  // namespace locrep::perm
