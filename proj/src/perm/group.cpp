#include "locrep/perm/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "locrep/errors.hpp"

namespace locrep::perm {

namespace {

void check_degree(std::size_t degree, const std::vector<Perm>& perms) {
  for (const auto& p : perms)
    if (p.degree() != degree) throw DomainError("permutation degree mismatch");
}

// Greedy generating set: keep an element whenever it is not yet generated.
std::vector<Perm> greedy_generators(std::size_t degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> generated{Perm::identity(degree)};
  for (const auto& x : elements) {
    if (generated.count(x)) continue;
    gens.push_back(x);
    generated.clear();
    std::vector<Perm> queue{Perm::identity(degree)};
    generated.insert(queue.front());
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : gens) {
        Perm y = queue[k] * s;
        if (generated.insert(y).second) queue.push_back(std::move(y));
      }
  }
  return gens;
}

}  // namespace

GroupSpec GroupSpec::generate(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  if (cap < 1) throw DomainError("cap must be positive");
  check_degree(degree, generators);
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : generators) {
      Perm y = queue[k] * s;
      if (seen.insert(y).second) {
        queue.push_back(std::move(y));
        if (queue.size() > cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      }
    }
  }
  GroupSpec g;
  g.degree_ = degree;
  g.gens_ = std::move(generators);
  std::sort(queue.begin(), queue.end());
  g.elements_ = std::move(queue);
  return g;
}

GroupSpec GroupSpec::from_closed(std::size_t degree, std::vector<Perm> generators,
                                 std::vector<Perm> elements) {
  check_degree(degree, generators);
  check_degree(degree, elements);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw DomainError("element list lacks the identity");
  GroupSpec g;
  g.degree_ = degree;
  g.gens_ = std::move(generators);
  g.elements_ = std::move(elements);
  return g;
}

GroupSpec GroupSpec::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto gens = greedy_generators(degree, elements);
  return from_closed(degree, std::move(gens), std::move(elements));
}

std::optional<std::size_t> GroupSpec::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t GroupSpec::require_index(const Perm& p) const {
  auto i = index_of(p);
  if (!i) throw DomainError("permutation is not in the group: " + p.to_string());
  return *i;
}

std::vector<std::vector<Point>> orbits(const GroupSpec& g) {
  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : g.generators())
    for (Point x = 0; x < n; ++x) {
      Point a = find(x), b = find(s(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Point>> out;
  std::vector<int> slot(n, -1);
  for (Point x = 0; x < n; ++x) {
    Point r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

bool is_transitive(const GroupSpec& g) { return orbits(g).size() <= 1; }

GroupSpec subgroup_where(const GroupSpec& g, const std::function<bool(const Perm&)>& pred) {
  std::vector<Perm> elems;
  for (const auto& x : g.elements())
    if (pred(x)) elems.push_back(x);
  auto gens = greedy_generators(g.degree(), elems);
  GroupSpec h = GroupSpec::generate(g.degree(), gens, elems.size());
  if (h.order() != elems.size()) throw DomainError("selected elements do not form a subgroup");
  return GroupSpec::from_closed(g.degree(), std::move(gens), std::move(elems));
}

GroupSpec point_stabilizer(const GroupSpec& g, Point pt) {
  return subgroup_where(g, [pt](const Perm& x) { return x(pt) == pt; });
}

GroupSpec conjugate(const GroupSpec& h, const Perm& g) {
  std::vector<Perm> gens, elems;
  for (const auto& s : h.generators()) gens.push_back(s.conjugate_by(g));
  for (const auto& x : h.elements()) elems.push_back(x.conjugate_by(g));
  return GroupSpec::from_closed(h.degree(), std::move(gens), std::move(elems));
}

bool is_subgroup(const GroupSpec& g, const GroupSpec& h) {
  if (g.degree() != h.degree()) return false;
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [&](const Perm& x) { return g.contains(x); });
}

bool is_normal(const GroupSpec& g, const GroupSpec& n) {
  if (!is_subgroup(g, n)) return false;
  for (const auto& s : g.generators())
    for (const auto& x : n.generators())
      if (!n.contains(x.conjugate_by(s))) return false;
  return true;
}

ConjugacyClasses conjugacy_classes(const GroupSpec& g) {
  ConjugacyClasses cc;
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  cc.class_of.assign(g.order(), kUnset);
  std::vector<Perm> inv_gens;
  for (const auto& s : g.generators()) inv_gens.push_back(s.inverse());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (cc.class_of[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(cc.count++);
    std::vector<std::size_t> queue{i};
    cc.class_of[i] = c;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Perm& x = g.element(queue[k]);
      for (std::size_t j = 0; j < inv_gens.size(); ++j) {
        std::size_t y = g.require_index(inv_gens[j] * x * g.generators()[j]);
        if (cc.class_of[y] == kUnset) {
          cc.class_of[y] = c;
          queue.push_back(y);
        }
      }
    }
  }
  return cc;
}

bool is_simple(const GroupSpec& g) {
  if (g.order() == 1) return false;
  auto cc = conjugacy_classes(g);
  std::vector<std::vector<std::size_t>> members(cc.count);
  for (std::size_t i = 0; i < g.order(); ++i) members[cc.class_of[i]].push_back(i);
  for (const auto& cls : members) {
    if (g.element(cls.front()).is_identity()) continue;
    // Normal closure of the class, grown one generator at a time.
    std::vector<Perm> gens;
    std::unordered_set<Perm, PermHash> closure{g.identity()};
    for (std::size_t i : cls) {
      if (closure.count(g.element(i))) continue;
      gens.push_back(g.element(i));
      GroupSpec h = GroupSpec::generate(g.degree(), gens, g.order());
      closure = std::unordered_set<Perm, PermHash>(h.elements().begin(), h.elements().end());
    }
    if (closure.size() != g.order()) return false;
  }
  return true;
}

std::vector<GroupSpec> subgroups_up_to_conjugacy(const GroupSpec& g) {
  std::set<std::vector<std::size_t>> found;
  auto indices = [&](const GroupSpec& h) {
    std::vector<std::size_t> idx;
    for (const auto& x : h.elements()) idx.push_back(g.require_index(x));
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i; j < g.order(); ++j) {
      GroupSpec h = GroupSpec::generate(g.degree(), {g.element(i), g.element(j)}, g.order());
      found.insert(indices(h));
    }
  std::set<std::vector<std::size_t>> canonical;
  std::vector<GroupSpec> reps;
  for (const auto& idx : found) {
    std::vector<std::size_t> best;
    for (const auto& c : g.elements()) {
      std::vector<std::size_t> conj;
      for (std::size_t k : idx) conj.push_back(g.require_index(g.element(k).conjugate_by(c)));
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best) best = std::move(conj);
    }
    if (!canonical.insert(best).second) continue;
    std::vector<Perm> elems;
    for (std::size_t k : best) elems.push_back(g.element(k));
    reps.push_back(GroupSpec::from_elements(g.degree(), std::move(elems)));
  }
  std::stable_sort(reps.begin(), reps.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return reps;
}

CoverReport normal_covering_check(const GroupSpec& g, const std::vector<GroupSpec>& subgroups) {
  auto cc = conjugacy_classes(g);
  std::vector<bool> covered(cc.count, false);
  for (const auto& u : subgroups) {
    if (!is_subgroup(g, u)) throw DomainError("not a subgroup");
    if (u.order() == g.order()) throw DomainError("covering subgroups must be proper");
    for (const auto& x : u.elements()) covered[cc.class_of[g.require_index(x)]] = true;
  }
  CoverReport report;
  report.covered = true;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!covered[cc.class_of[i]]) {
      report.covered = false;
      report.witness = g.element(i);
      break;
    }
  }
  return report;
}

std::vector<std::uint64_t> branch_cycle_constraint(const GroupSpec& a, const Perm& s) {
  const std::size_t i = a.require_index(s);
  auto cc = conjugacy_classes(a);
  const std::uint64_t e = s.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= e; ++m) {
    if (std::gcd(m, e) != 1) continue;
    if (cc.class_of[a.require_index(s.pow(static_cast<long long>(m)))] == cc.class_of[i])
      out.push_back(m);
  }
  return out;
}

}  // namespace locrep::perm
