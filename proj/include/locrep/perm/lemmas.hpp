#pragma once

#include <cstddef>
#include <vector>

#include "locrep/perm/action.hpp"
#include "locrep/perm/builders.hpp"

namespace locrep::perm {

// Natural action of g with one coset block per subgroup, labeled "U0", "U1", ...
MarkedAction coset_blocks(const GroupSpec& g, const std::vector<GroupSpec>& us);

// Whether every coset of the normal subgroup n contains an element that is
// fixed-point free on all blocks in `labels`.
bool every_coset_has_fpf(const MarkedAction& a, const GroupSpec& n, const std::vector<std::string>& labels);

struct WreathCheckStats {
  std::size_t families = 0;
  std::size_t hypothesis_holds = 0;
  std::size_t counterexamples = 0;
};

// Exhausts families {U_1..U_r} (r <= max_r, subgroups up to conjugacy) and
// nontrivial normal subgroups L of g: whenever every L-coset of g has an
// element fixed-point free on all G/U_i, checks that every L^k-coset of
// g wr S_k has one on all cosets of U_i^k x| S_k.
WreathCheckStats wreath_coset_check(const GroupSpec& g, std::size_t k = 2, std::size_t max_r = 2);

// In AGL_1(F_{p^2}), count elements outside the translations whose number of
// fixed points differs from one.
std::size_t frobenius_exceptions(const Fp2& f);

}  // namespace locrep::perm
