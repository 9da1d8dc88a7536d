#include "locrep/perm/action.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locrep/errors.hpp"

namespace locrep::perm {

const Block& MarkedAction::block(const std::string& label) const {
  for (const auto& b : blocks)
    if (b.label == label) return b;
  throw DomainError("unknown block label: " + label);
}

std::vector<std::string> MarkedAction::labels() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.push_back(b.label);
  return out;
}

namespace {

constexpr auto kUnset = static_cast<std::uint32_t>(-1);

struct CosetTable {
  std::vector<std::uint32_t> coset_of;
  std::vector<std::size_t> reps;
};

CosetTable right_cosets(const GroupSpec& g, const GroupSpec& u) {
  if (!is_subgroup(g, u)) throw DomainError("not a subgroup");
  CosetTable t;
  t.coset_of.assign(g.order(), kUnset);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (t.coset_of[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(t.reps.size());
    t.reps.push_back(i);
    for (const auto& x : u.elements()) t.coset_of[g.require_index(x * g.element(i))] = c;
  }
  return t;
}

// Image of each coset U r under x, as a point list offset by `shift`.
void append_coset_images(const CosetTable& t, const GroupSpec& g, const Perm& x, Point shift,
                         std::vector<Point>& out) {
  for (std::size_t r : t.reps) out.push_back(shift + t.coset_of[g.require_index(g.element(r) * x)]);
}

Perm extend(const Perm& x, const std::vector<Point>& tail) {
  std::vector<Point> img = x.images();
  img.insert(img.end(), tail.begin(), tail.end());
  return Perm(std::move(img));
}

std::vector<std::pair<Point, Point>> ranges_for(const MarkedAction& a,
                                                const std::vector<std::string>& restrict_to) {
  std::vector<std::pair<Point, Point>> out;
  if (restrict_to.empty()) {
    for (const auto& b : a.blocks) out.emplace_back(b.begin, b.end);
  } else {
    for (const auto& l : restrict_to) {
      const auto& b = a.block(l);
      out.emplace_back(b.begin, b.end);
    }
  }
  return out;
}

bool fpf_on(const Perm& x, const std::vector<std::pair<Point, Point>>& ranges) {
  for (const auto& [b, e] : ranges)
    if (x.fixes_point_in(b, e)) return false;
  return true;
}

}  // namespace

GroupSpec preimage(const GroupSpec& g, const GroupSpec& u) {
  if (u.degree() == g.degree()) return u;
  if (u.degree() > g.degree()) throw DomainError("subgroup has larger degree than the group");
  const auto m = static_cast<std::ptrdiff_t>(u.degree());
  return subgroup_where(g, [&](const Perm& x) {
    std::vector<Point> head(x.images().begin(), x.images().begin() + m);
    for (Point p : head)
      if (p >= u.degree()) return false;
    return u.contains(Perm(std::move(head)));
  });
}

MarkedAction natural_action(const GroupSpec& g, std::string label) {
  return MarkedAction{g, {Block{std::move(label), 0, static_cast<Point>(g.degree())}}};
}

MarkedAction coset_action(const GroupSpec& g, const GroupSpec& u, std::string label) {
  const CosetTable t = right_cosets(g, u);
  const std::size_t n = t.reps.size();
  auto image = [&](const Perm& x) {
    std::vector<Point> img;
    append_coset_images(t, g, x, 0, img);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens, elems;
  for (const auto& s : g.generators()) gens.push_back(image(s));
  for (const auto& x : g.elements()) elems.push_back(image(x));
  GroupSpec img = GroupSpec::from_closed(n, std::move(gens), std::move(elems));
  return MarkedAction{std::move(img), {Block{std::move(label), 0, static_cast<Point>(n)}}};
}

MarkedAction append_coset_block(const MarkedAction& a, const GroupSpec& sub, std::string label) {
  const GroupSpec& g = a.group;
  const CosetTable t = right_cosets(g, preimage(g, sub));
  const auto shift = static_cast<Point>(g.degree());
  auto ext = [&](const Perm& x) {
    std::vector<Point> tail;
    append_coset_images(t, g, x, shift, tail);
    return extend(x, tail);
  };
  std::vector<Perm> gens, elems;
  for (const auto& s : g.generators()) gens.push_back(ext(s));
  elems.reserve(g.order());
  for (const auto& x : g.elements()) elems.push_back(ext(x));
  const std::size_t degree = g.degree() + t.reps.size();
  MarkedAction out{GroupSpec::from_closed(degree, std::move(gens), std::move(elems)), a.blocks};
  out.blocks.push_back(Block{std::move(label), shift, static_cast<Point>(degree)});
  return out;
}

MarkedAction sign_character_action(const MarkedAction& a, const GroupSpec& sub, std::string label) {
  const GroupSpec& g = a.group;
  const GroupSpec u = preimage(g, sub);
  if (!is_subgroup(g, u) || 2 * u.order() != g.order())
    throw DomainError("sign block needs an index-2 subgroup");
  const auto shift = static_cast<Point>(g.degree());
  auto ext = [&](const Perm& x) {
    return u.contains(x) ? extend(x, {shift, shift + 1}) : extend(x, {shift + 1, shift});
  };
  std::vector<Perm> gens, elems;
  for (const auto& s : g.generators()) gens.push_back(ext(s));
  for (const auto& x : g.elements()) elems.push_back(ext(x));
  MarkedAction out{GroupSpec::from_closed(g.degree() + 2, std::move(gens), std::move(elems)), a.blocks};
  out.blocks.push_back(Block{std::move(label), shift, shift + 2});
  return out;
}

MarkedAction restrict_blocks(const MarkedAction& a, const std::vector<std::string>& labels) {
  std::vector<Block> old, fresh;
  Point next = 0;
  for (const auto& l : labels) {
    const Block& b = a.block(l);
    old.push_back(b);
    fresh.push_back(Block{l, next, static_cast<Point>(next + b.size())});
    next += static_cast<Point>(b.size());
  }
  auto project = [&](const Perm& x) {
    std::vector<Point> img;
    img.reserve(next);
    for (std::size_t k = 0; k < old.size(); ++k)
      for (Point p = old[k].begin; p < old[k].end; ++p) img.push_back(x(p) - old[k].begin + fresh[k].begin);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens, elems;
  for (const auto& s : a.group.generators()) gens.push_back(project(s));
  for (const auto& x : a.group.elements()) elems.push_back(project(x));
  return MarkedAction{GroupSpec::from_closed(next, std::move(gens), std::move(elems)), std::move(fresh)};
}

MarkedAction direct_product_action(const std::vector<MarkedAction>& factors, std::size_t cap) {
  std::size_t order = 1, degree = 0;
  std::set<std::string> labels;
  std::vector<Block> blocks;
  std::vector<Point> shifts;
  for (const auto& f : factors) {
    order *= f.group.order();
    if (order > cap) throw CapExceeded("direct product exceeds cap " + std::to_string(cap));
    shifts.push_back(static_cast<Point>(degree));
    for (auto b : f.blocks) {
      if (!labels.insert(b.label).second) throw DomainError("duplicate block label " + b.label);
      b.begin += static_cast<Point>(degree);
      b.end += static_cast<Point>(degree);
      blocks.push_back(b);
    }
    degree += f.degree();
  }
  auto embed = [&](std::size_t k, const Perm& x) {
    std::vector<Point> img(degree);
    for (Point p = 0; p < degree; ++p) img[p] = p;
    for (Point p = 0; p < x.degree(); ++p) img[shifts[k] + p] = shifts[k] + x(p);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (const auto& s : factors[k].group.generators()) gens.push_back(embed(k, s));
  std::vector<Perm> elems;
  elems.reserve(order);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t n = 0; n < order; ++n) {
    std::vector<Point> img;
    img.reserve(degree);
    for (std::size_t k = 0; k < factors.size(); ++k)
      for (Point p : factors[k].group.element(idx[k]).images()) img.push_back(shifts[k] + p);
    elems.emplace_back(std::move(img));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++idx[k] < factors[k].group.order()) break;
      idx[k] = 0;
    }
  }
  return MarkedAction{GroupSpec::from_closed(degree, std::move(gens), std::move(elems)), std::move(blocks)};
}

MarkedAction relabel(const MarkedAction& a, const std::vector<Point>& map, std::vector<Block> blocks) {
  if (map.size() != a.degree()) throw DomainError("relabel map has the wrong size");
  Perm m(map);
  auto move = [&](const Perm& x) { return m.inverse() * x * m; };
  std::vector<Perm> gens, elems;
  for (const auto& s : a.group.generators()) gens.push_back(move(s));
  for (const auto& x : a.group.elements()) elems.push_back(move(x));
  return MarkedAction{GroupSpec::from_closed(a.degree(), std::move(gens), std::move(elems)), std::move(blocks)};
}

Homomorphism quotient_map(const GroupSpec& g, const GroupSpec& n) {
  if (!is_normal(g, n)) throw DomainError("quotient by a non-normal subgroup");
  MarkedAction act = coset_action(g, n, "quotient");
  const CosetTable t = right_cosets(g, n);
  Homomorphism q{act.group, {}};
  q.image.reserve(g.order());
  for (const auto& x : g.elements()) {
    std::vector<Point> img;
    append_coset_images(t, g, x, 0, img);
    q.image.push_back(q.target.require_index(Perm(std::move(img))));
  }
  return q;
}

Homomorphism character_map(const GroupSpec& g, const GroupSpec& u) {
  if (!is_subgroup(g, u) || 2 * u.order() != g.order())
    throw DomainError("character needs an index-2 subgroup");
  Homomorphism q{GroupSpec::generate(2, {Perm({1, 0})}), {}};
  for (const auto& x : g.elements()) q.image.push_back(u.contains(x) ? 0 : 1);
  return q;
}

Homomorphism trivial_map(const GroupSpec& g) {
  return Homomorphism{GroupSpec::generate(1, {}), std::vector<std::size_t>(g.order(), 0)};
}

Homomorphism identity_map(const GroupSpec& g) {
  Homomorphism q{g, {}};
  for (std::size_t i = 0; i < g.order(); ++i) q.image.push_back(i);
  return q;
}

bool is_homomorphism(const GroupSpec& g, const Homomorphism& q) {
  if (q.image.size() != g.order()) return false;
  if (!q.target.element(q.image[0]).is_identity()) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (const auto& s : g.generators()) {
      const std::size_t is = g.require_index(s);
      const Perm expect = q.target.element(q.image[i]) * q.target.element(q.image[is]);
      if (q.target.element(q.image[g.require_index(g.element(i) * s)]) != expect) return false;
    }
  return true;
}

MarkedAction fibered_product(const MarkedAction& g, const MarkedAction& h, const Homomorphism& q1,
                             const Homomorphism& q2, std::size_t cap) {
  if (q1.target.elements() != q2.target.elements())
    throw DomainError("fibered product needs a common quotient");
  if (!is_homomorphism(g.group, q1) || !is_homomorphism(h.group, q2))
    throw DomainError("quotient map is not a homomorphism");
  std::vector<std::vector<std::size_t>> bucket(q2.target.order());
  for (std::size_t j = 0; j < h.group.order(); ++j) bucket[q2.image[j]].push_back(j);
  std::size_t order = 0;
  for (std::size_t i = 0; i < g.group.order(); ++i) order += bucket[q1.image[i]].size();
  if (order > cap) throw CapExceeded("fibered product exceeds cap " + std::to_string(cap));
  const auto shift = static_cast<Point>(g.degree());
  std::vector<Perm> elems;
  elems.reserve(order);
  for (std::size_t i = 0; i < g.group.order(); ++i)
    for (std::size_t j : bucket[q1.image[i]]) {
      std::vector<Point> img = g.group.element(i).images();
      for (Point p : h.group.element(j).images()) img.push_back(shift + p);
      elems.emplace_back(std::move(img));
    }
  std::vector<Block> blocks = g.blocks;
  for (auto b : h.blocks) {
    b.begin += shift;
    b.end += shift;
    blocks.push_back(b);
  }
  return MarkedAction{GroupSpec::from_elements(g.degree() + h.degree(), std::move(elems)), std::move(blocks)};
}

GroupSpec wreath_product(const GroupSpec& g, std::size_t t, WreathMode mode, std::size_t cap) {
  std::vector<Perm> top;
  if (t >= 2) {
    std::vector<Point> swap(t), cyc(t);
    for (Point i = 0; i < t; ++i) {
      swap[i] = i;
      cyc[i] = static_cast<Point>((i + 1) % t);
    }
    std::swap(swap[0], swap[1]);
    top = {Perm(swap), Perm(cyc)};
  }
  return wreath_product(g, GroupSpec::generate(t, top), mode, cap);
}

GroupSpec wreath_product(const GroupSpec& g, const GroupSpec& top, WreathMode mode, std::size_t cap) {
  const std::size_t m = g.degree(), t = top.degree();
  std::vector<Perm> gens;
  if (mode == WreathMode::Imprimitive) {
    const std::size_t n = m * t;
    for (std::size_t i = 0; i < t; ++i)
      for (const auto& s : g.generators()) {
        std::vector<Point> img(n);
        for (Point p = 0; p < n; ++p) img[p] = p;
        for (Point x = 0; x < m; ++x) img[i * m + x] = static_cast<Point>(i * m + s(x));
        gens.emplace_back(std::move(img));
      }
    for (const auto& tau : top.generators()) {
      std::vector<Point> img(n);
      for (Point i = 0; i < t; ++i)
        for (Point x = 0; x < m; ++x) img[i * m + x] = static_cast<Point>(tau(i) * m + x);
      gens.emplace_back(std::move(img));
    }
    return GroupSpec::generate(n, std::move(gens), cap);
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < t; ++i) n *= m;
  auto digits = [&](Point p) {
    std::vector<Point> d(t);
    for (std::size_t i = 0; i < t; ++i) {
      d[i] = static_cast<Point>(p % m);
      p /= static_cast<Point>(m);
    }
    return d;
  };
  auto number = [&](const std::vector<Point>& d) {
    Point p = 0;
    for (std::size_t i = t; i-- > 0;) p = static_cast<Point>(p * m + d[i]);
    return p;
  };
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& s : g.generators()) {
      std::vector<Point> img(n);
      for (Point p = 0; p < n; ++p) {
        auto d = digits(p);
        d[i] = s(d[i]);
        img[p] = number(d);
      }
      gens.emplace_back(std::move(img));
    }
  for (const auto& tau : top.generators()) {
    std::vector<Point> img(n);
    for (Point p = 0; p < n; ++p) {
      auto d = digits(p);
      std::vector<Point> e(t);
      for (std::size_t i = 0; i < t; ++i) e[tau(static_cast<Point>(i))] = d[i];
      img[p] = number(e);
    }
    gens.emplace_back(std::move(img));
  }
  return GroupSpec::generate(n, std::move(gens), cap);
}

std::vector<Perm> fixed_point_free_elements(const MarkedAction& a, const std::vector<std::string>& restrict_to,
                                            bool first_only) {
  const auto ranges = ranges_for(a, restrict_to);
  std::vector<Perm> out;
  for (const auto& x : a.group.elements()) {
    if (!fpf_on(x, ranges)) continue;
    out.push_back(x);
    if (first_only) break;
  }
  return out;
}

CoverReport minimal_covering_check(const MarkedAction& a) {
  CoverReport r;
  auto all = fixed_point_free_elements(a, {}, true);
  r.covered = all.empty();
  if (!all.empty()) r.witness = all.front();
  r.minimal = r.covered;
  for (const auto& b : a.blocks) {
    std::vector<std::string> others;
    for (const auto& c : a.blocks)
      if (c.label != b.label) others.push_back(c.label);
    SubsetWitness w{b.label, std::nullopt};
    if (!others.empty()) {
      auto found = fixed_point_free_elements(a, others, true);
      if (!found.empty()) w.witness = found.front();
    } else {
      w.witness = a.group.identity();
    }
    if (!w.witness) r.minimal = false;
    r.per_subset.push_back(std::move(w));
  }
  return r;
}

CosetReport coset_fpf_check(const MarkedAction& a, const GroupSpec& sub, const Perm& sigma,
                            const std::vector<std::string>& restrict_to) {
  const GroupSpec n = preimage(a.group, sub);
  if (!is_normal(a.group, n)) throw DomainError("coset check needs a normal subgroup");
  if (!a.group.contains(sigma)) throw DomainError("coset representative is not in the group");
  const auto ranges = ranges_for(a, restrict_to);
  CosetReport r;
  for (const auto& x : n.elements()) {
    Perm y = sigma * x;
    if (!fpf_on(y, ranges)) continue;
    if (!r.witness || y < *r.witness) r.witness = y;
    r.all_fix = false;
  }
  return r;
}

}  // namespace locrep::perm
