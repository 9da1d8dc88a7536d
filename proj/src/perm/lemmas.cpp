#include "locrep/perm/lemmas.hpp"

#include <map>

#include "locrep/errors.hpp"

namespace locrep::perm {

namespace {

std::vector<std::string> coset_labels(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back("U" + std::to_string(i));
  return out;
}

// Component maps of an element of g wr S_k in the imprimitive action, plus
// whether it fixes every copy.
struct WreathParts {
  std::vector<Perm> components;
  bool top_trivial = true;
};

WreathParts split(const Perm& x, std::size_t m, std::size_t k) {
  WreathParts w;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t target = x(static_cast<Point>(j * m)) / m;
    if (target != j) w.top_trivial = false;
    std::vector<Point> img(m);
    for (Point p = 0; p < m; ++p) img[p] = static_cast<Point>(x(static_cast<Point>(j * m + p)) - target * m);
    w.components.emplace_back(std::move(img));
  }
  return w;
}

}  // namespace

MarkedAction coset_blocks(const GroupSpec& g, const std::vector<GroupSpec>& us) {
  MarkedAction a = natural_action(g, "base");
  auto labels = coset_labels(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) a = append_coset_block(a, us[i], labels[i]);
  return a;
}

bool every_coset_has_fpf(const MarkedAction& a, const GroupSpec& sub, const std::vector<std::string>& labels) {
  const GroupSpec& g = a.group;
  const GroupSpec n = preimage(g, sub);
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    for (const auto& x : n.elements()) seen[g.require_index(g.element(i) * x)] = true;
    if (coset_fpf_check(a, n, g.element(i), labels).all_fix) return false;
  }
  return true;
}

WreathCheckStats wreath_coset_check(const GroupSpec& g, std::size_t k, std::size_t max_r) {
  const std::size_t m = g.degree();
  std::vector<GroupSpec> proper, normals;
  for (auto& h : subgroups_up_to_conjugacy(g)) {
    if (h.order() > 1 && is_normal(g, h)) normals.push_back(h);
    if (h.order() < g.order()) proper.push_back(std::move(h));
  }
  const GroupSpec w = wreath_product(g, k, WreathMode::Imprimitive);
  std::vector<WreathParts> parts;
  parts.reserve(w.order());
  for (const auto& x : w.elements()) parts.push_back(split(x, m, k));
  auto all_in = [](const WreathParts& p, const GroupSpec& u) {
    for (const auto& c : p.components)
      if (!u.contains(c)) return false;
    return true;
  };
  auto lift = [&](const GroupSpec& u, bool need_top_trivial) {
    return subgroup_where(w, [&](const Perm& x) {
      const auto& p = parts[w.require_index(x)];
      return (!need_top_trivial || p.top_trivial) && all_in(p, u);
    });
  };
  std::vector<GroupSpec> lifted;
  for (const auto& u : proper) lifted.push_back(lift(u, false));

  std::vector<std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    if (max_r >= 1) families.push_back({i});
    if (max_r >= 2)
      for (std::size_t j = i + 1; j < proper.size(); ++j) families.push_back({i, j});
  }
  WreathCheckStats stats;
  for (const auto& l : normals) {
    const GroupSpec lk = lift(l, true);
    for (const auto& fam : families) {
      ++stats.families;
      std::vector<GroupSpec> us, wus;
      for (std::size_t i : fam) {
        us.push_back(proper[i]);
        wus.push_back(lifted[i]);
      }
      const auto labels = coset_labels(fam.size());
      if (!every_coset_has_fpf(coset_blocks(g, us), l, labels)) continue;
      ++stats.hypothesis_holds;
      if (!every_coset_has_fpf(coset_blocks(w, wus), lk, labels)) ++stats.counterexamples;
    }
  }
  return stats;
}

std::size_t frobenius_exceptions(const Fp2& f) {
  const GroupSpec g = agl1(f);
  std::size_t bad = 0;
  for (const auto& x : g.elements()) {
    if (semilinear_decompose(f, x).a == 1) continue;
    std::size_t fixed = 0;
    for (Point p = 0; p < x.degree(); ++p) fixed += x(p) == p;
    if (fixed != 1) ++bad;
  }
  return bad;
}

}  // namespace locrep::perm
