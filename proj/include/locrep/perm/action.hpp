#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locrep/perm/group.hpp"

namespace locrep::perm {

struct Block {
  std::string label;
  Point begin = 0;
  Point end = 0;
  std::size_t size() const { return end - begin; }
};

// A group acting on a disjoint union of labeled, invariant point ranges.
struct MarkedAction {
  GroupSpec group;
  std::vector<Block> blocks;

  std::size_t degree() const { return group.degree(); }
  const Block& block(const std::string& label) const;
  std::vector<std::string> labels() const;
};

MarkedAction natural_action(const GroupSpec& g, std::string label);
// Elements of g whose restriction to the first u.degree() points lies in u.
// Subgroups passed to the functions below may be given on a leading block
// this way; they are lifted with this map.
GroupSpec preimage(const GroupSpec& g, const GroupSpec& u);
// Action on the right cosets Ux. Throws DomainError if U is not a subgroup.
MarkedAction coset_action(const GroupSpec& g, const GroupSpec& u, std::string label = "cosets");
// Appends the coset action on U (U <= a.group) as a new block, keeping the
// element order of a.group.
MarkedAction append_coset_block(const MarkedAction& a, const GroupSpec& u, std::string label);
// Appends a 2-point block swapped exactly by the elements outside U.
MarkedAction sign_character_action(const MarkedAction& a, const GroupSpec& u, std::string label);
// Keeps the listed blocks (in the given order); the group is the image.
MarkedAction restrict_blocks(const MarkedAction& a, const std::vector<std::string>& labels);
MarkedAction direct_product_action(const std::vector<MarkedAction>& factors,
                                   std::size_t cap = kDefaultCap);
// Relabels points with `map` (old point -> new point), keeping block labels;
// `blocks` describes the new layout.
MarkedAction relabel(const MarkedAction& a, const std::vector<Point>& map, std::vector<Block> blocks);

// A homomorphism given on elements: image[i] indexes target.elements() for
// the i-th element of the source group.
struct Homomorphism {
  GroupSpec target;
  std::vector<std::size_t> image;
};

Homomorphism quotient_map(const GroupSpec& g, const GroupSpec& n);
// Onto {id, (0 1)} with kernel U, [G:U] = 2.
Homomorphism character_map(const GroupSpec& g, const GroupSpec& u);
Homomorphism trivial_map(const GroupSpec& g);
Homomorphism identity_map(const GroupSpec& g);
bool is_homomorphism(const GroupSpec& g, const Homomorphism& q);

// {(x, y) : q1(x) = q2(y)} acting on the disjoint union of both point sets.
MarkedAction fibered_product(const MarkedAction& g, const MarkedAction& h, const Homomorphism& q1,
                             const Homomorphism& q2, std::size_t cap = kDefaultCap);

enum class WreathMode { Imprimitive, Product };
GroupSpec wreath_product(const GroupSpec& g, std::size_t t, WreathMode mode,
                         std::size_t cap = kDefaultCap);
// G wr K for a top group K of degree t.
GroupSpec wreath_product(const GroupSpec& g, const GroupSpec& top, WreathMode mode,
                         std::size_t cap = kDefaultCap);

// Elements with no fixed point in the selected blocks (all blocks if empty).
std::vector<Perm> fixed_point_free_elements(const MarkedAction& a,
                                            const std::vector<std::string>& restrict_to = {},
                                            bool first_only = false);
CoverReport minimal_covering_check(const MarkedAction& a);

struct CosetReport {
  bool all_fix = true;
  std::optional<Perm> witness;
};
// Whether every element of sigma*N fixes a point in the selected blocks.
CosetReport coset_fpf_check(const MarkedAction& a, const GroupSpec& n, const Perm& sigma,
                            const std::vector<std::string>& restrict_to = {});

}  // namespace locrep::perm
