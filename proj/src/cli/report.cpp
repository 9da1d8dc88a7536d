#include "locrep/cli/report.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "locrep/catalog/catalog.hpp"
#include "locrep/cli/parse.hpp"
#include "locrep/errors.hpp"
#include "locrep/perm/builders.hpp"
#include "locrep/verify/verify.hpp"

namespace locrep::cli {

namespace {

struct FunctionSet {
  std::vector<std::string> labels;
  std::vector<RatFunc> fs;
  std::optional<catalog::CatalogEntry> entry;
};

FunctionSet resolve(const JobConfig& c) {
  if (!c.exprs.empty() && !c.catalog.empty()) throw DomainError("give functions or --catalog, not both");
  FunctionSet s;
  if (!c.catalog.empty()) {
    s.entry = catalog::entry(c.catalog);
    if (s.entry->functions.empty()) throw DomainError(s.entry->name + " is abstract and has no functions");
    for (const auto& f : s.entry->functions) {
      s.labels.push_back(f.label);
      s.fs.push_back(f.f);
    }
    return s;
  }
  if (c.exprs.empty()) throw DomainError("no functions given");
  for (std::size_t i = 0; i < c.exprs.size(); ++i) {
    s.labels.push_back("f" + std::to_string(i + 1));
    s.fs.push_back(parse_ratfunc(c.exprs[i]));
  }
  return s;
}

json set_json(const FunctionSet& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.fs.size(); ++i) out.push_back({{"label", s.labels[i]}, {"expr", format_ratfunc(s.fs[i])}});
  return out;
}

json config_json(const JobConfig& c) {
  json j = {{"prime_bound", c.prime_bound}, {"t0_samples", c.t0_samples}, {"seed", c.seed}, {"cap", c.cap}};
  j["catalog"] = c.catalog.empty() ? json(nullptr) : json(c.catalog);
  j["t0"] = c.t0 ? json(c.t0->get_str()) : json(nullptr);
  j["p"] = c.p ? json(*c.p) : json(nullptr);
  return j;
}

json base_report(const std::string& command, const JobConfig& c) {
  return {{"command", command}, {"config", config_json(c)}};
}

std::vector<Rat> samples(const JobConfig& c, const std::vector<RatFunc>& fs) {
  if (c.t0) return {*c.t0};
  return verify::default_t0_samples(fs, c.t0_samples, c.seed);
}

json witness_json(const std::optional<verify::Witness>& w) {
  if (!w) return nullptr;
  return {{"t0", w->t0.get_str()}, {"p", w->p}};
}

json scan_json(const verify::ScanReport& r) {
  json bad = json::array();
  for (std::uint64_t p : primes_up_to(r.prime_bound))
    if (r.bad.contains(p)) bad.push_back(p);
  return {{"t0", r.t0.get_str()},
          {"exceptional", r.exceptional},
          {"bad", bad},
          {"verdict", r.pass ? "pass" : "fail"},
          {"offending", r.offending ? json(*r.offending) : json(nullptr)}};
}

json perm_json(const std::optional<perm::Perm>& p) { return p ? json(p->to_string()) : json(nullptr); }

void check_cap(const perm::MarkedAction& m, std::size_t cap) {
  if (m.group.order() > cap)
    throw CapExceeded("group order " + std::to_string(m.group.order()) + " exceeds cap " + std::to_string(cap));
}

json certificate_json(const perm::MarkedAction& m) {
  const auto c = verify::certify_with_group(m);
  json per = json::array();
  for (const auto& s : c.per_subset) per.push_back({{"dropped", s.dropped}, {"witness", perm_json(s.witness)}});
  json blocks = json::array();
  for (const auto& b : m.blocks) blocks.push_back({{"label", b.label}, {"size", b.size()}});
  return {{"order", m.group.order()}, {"blocks", blocks},         {"covered", c.covered},
          {"minimal", c.minimal},     {"witness", perm_json(c.witness)}, {"per_subset", per}};
}

std::optional<perm::MarkedAction> entry_model(const FunctionSet& s, std::size_t cap) {
  if (!s.entry || !s.entry->model) return std::nullopt;
  auto m = s.entry->model();
  check_cap(m, cap);
  return m;
}

std::uint64_t json_uint(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw DomainError(std::string("missing nonnegative integer field ") + key);
  return j[key].get<std::uint64_t>();
}

perm::GroupSpec build_group(const json& g, std::size_t cap) {
  if (!g.is_object() || !g.contains("build") || !g["build"].is_string()) throw DomainError("group needs a build field");
  const std::string b = g["build"];
  perm::GroupSpec out = [&] {
    if (b == "symmetric") return perm::symmetric(json_uint(g, "n"));
    if (b == "alternating") return perm::alternating(json_uint(g, "n"));
    if (b == "cyclic") return perm::cyclic(json_uint(g, "n"));
    if (b == "dihedral") return perm::dihedral(json_uint(g, "n"));
    if (b == "agl1") return perm::agl1(static_cast<std::uint32_t>(json_uint(g, "p")));
    if (b == "pgl2") return perm::pgl2(static_cast<std::uint32_t>(json_uint(g, "p")));
    if (b == "agammal1") return perm::agammal1(perm::Fp2(static_cast<std::uint32_t>(json_uint(g, "p"))));
    if (b == "mathieu11") return perm::mathieu11();
    if (b == "generators") {
      const std::size_t n = json_uint(g, "degree");
      std::vector<perm::Perm> gens;
      for (const auto& img : g.at("generators")) {
        const auto v = img.get<std::vector<perm::Point>>();
        if (v.size() != n) throw DomainError("generator has the wrong degree");
        gens.emplace_back(v);
      }
      return perm::GroupSpec::generate(n, std::move(gens), cap);
    }
    if (b == "wreath") {
      const std::string mode = g.value("mode", "imprimitive");
      if (mode != "imprimitive" && mode != "product") throw DomainError("wreath mode must be imprimitive or product");
      return perm::wreath_product(build_group(g.at("base"), cap), json_uint(g, "t"),
                                  mode == "product" ? perm::WreathMode::Product : perm::WreathMode::Imprimitive, cap);
    }
    throw DomainError("unknown group build " + b);
  }();
  if (out.order() > cap)
    throw CapExceeded("group order " + std::to_string(out.order()) + " exceeds cap " + std::to_string(cap));
  return out;
}

std::string partition_text(const json& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i].get<int>());
  return s + "]";
}

}  // namespace

std::size_t cap_from_env(std::size_t fallback) {
  const char* v = std::getenv("LOCREP_CAP");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw DomainError("LOCREP_CAP must be a positive integer");
  return static_cast<std::size_t>(n);
}

perm::MarkedAction build_model(const json& spec, std::size_t cap) {
  if (!spec.is_object() || !spec.contains("group")) throw DomainError("model needs a group field");
  const perm::GroupSpec g = build_group(spec["group"], cap);
  const json blocks = spec.value("blocks", json::array({{{"label", "f"}, {"natural", true}}}));
  if (!blocks.is_array() || blocks.empty()) throw DomainError("model needs at least one block");
  std::optional<perm::MarkedAction> m;
  for (const auto& b : blocks) {
    const std::string label = b.value("label", "f" + std::to_string(m ? m->blocks.size() + 1 : 1));
    if (b.value("natural", false)) {
      if (m) throw DomainError("only the first block can be the natural action");
      m = perm::natural_action(g, label);
    } else if (b.contains("subgroup")) {
      const auto u = perm::preimage(g, build_group(b["subgroup"], cap));
      m = m ? perm::append_coset_block(*m, u, label) : perm::coset_action(g, u, label);
    } else if (b.contains("kernel")) {
      if (!m) throw DomainError("a sign block needs a block before it");
      m = perm::sign_character_action(*m, perm::preimage(g, build_group(b["kernel"], cap)), label);
    } else {
      throw DomainError("block " + label + " needs natural, subgroup or kernel");
    }
  }
  return *m;
}

json run_check(const JobConfig& c) {
  const auto s = resolve(c);
  json r = base_report("check", c);
  r["set"] = set_json(s);
  const auto agg = verify::check_locally_representing(s.fs, samples(c, s.fs), c.prime_bound);
  r["per_t0"] = json::array();
  for (const auto& t : agg.per_t0) r["per_t0"].push_back(scan_json(t));
  r["witness"] = witness_json(agg.witness);
  r["minimality"] = json::array();
  const auto m = entry_model(s, c.cap);
  r["certificate"] = m ? certificate_json(*m) : json(nullptr);
  return r;
}

json run_minimal(const JobConfig& c) {
  const auto s = resolve(c);
  json r = base_report("minimal", c);
  r["set"] = set_json(s);
  const auto t0s = samples(c, s.fs);
  const auto agg = verify::check_locally_representing(s.fs, t0s, c.prime_bound);
  r["per_t0"] = json::array();
  for (const auto& t : agg.per_t0) r["per_t0"].push_back(scan_json(t));
  r["witness"] = witness_json(agg.witness);
  const auto mr = verify::check_minimality(s.fs, t0s, c.prime_bound);
  r["minimality"] = json::array();
  for (const auto& d : mr.drops)
    r["minimality"].push_back({{"dropped", s.labels[d.index]}, {"witness", witness_json(d.witness)}});
  r["certificate"] = nullptr;
  return r;
}

json run_padic(const JobConfig& c) {
  const auto s = resolve(c);
  if (s.fs.size() != 1) throw DomainError("padic takes one function");
  if (!c.t0) throw DomainError("padic needs --t0");
  if (!c.p || !is_prime(*c.p)) throw DomainError("padic needs a prime --p");
  json r = base_report("padic", c);
  r["set"] = set_json(s);
  const RatFunc& f = s.fs[0];
  json q = {{"t0", c.t0->get_str()}, {"p", *c.p}, {"witness", nullptr}};
  q["at_infinity"] = f(ProjRat::infinity()) == ProjRat(*c.t0);
  bool solvable = q["at_infinity"];
  if (!solvable) {
    const Poly fib = padic::integer_fiber(f, *c.t0);
    if (fib.degree() >= 1) {
      const auto d = padic::qp_root_exists(fib, *c.p);
      solvable = d.solvable;
      if (d.witness)
        q["witness"] = {{"residue", d.witness->residue.get_str()},
                        {"k", d.witness->k},
                        {"v", d.witness->v},
                        {"reversed", d.reversed}};
    }
  }
  q["solvable"] = solvable;
  r["padic"] = q;
  return r;
}

json run_branch(const JobConfig& c) {
  const auto s = resolve(c);
  json r = base_report("branch", c);
  r["set"] = set_json(s);
  r["branch"] = json::array();
  for (std::size_t i = 0; i < s.fs.size(); ++i) {
    if (s.fs[i].degree() < 1) throw DomainError(s.labels[i] + " is constant");
    const auto cv = ram::critical_values(s.fs[i]);
    json pts = json::array();
    for (const auto& b : cv.points) pts.push_back({{"at", b.label()}, {"partition", b.partition}});
    r["branch"].push_back({{"label", s.labels[i]},
                           {"degree", cv.degree},
                           {"branch_polynomial", cv.branch_polynomial.to_string()},
                           {"points", pts},
                           {"rh", ram::rh_verify(cv)}});
  }
  return r;
}

json run_group(const JobConfig& c) {
  if (!c.exprs.empty()) throw DomainError("group takes --catalog or --model");
  if (c.catalog.empty() == c.model.empty()) throw DomainError("group takes exactly one of --catalog and --model");
  json r = base_report("group", c);
  perm::MarkedAction m;
  if (!c.catalog.empty()) {
    const auto e = catalog::entry(c.catalog);
    if (!e.model) throw DomainError(e.name + " has no group model");
    m = e.model();
    check_cap(m, c.cap);
  } else {
    json spec;
    try {
      spec = json::parse(c.model);
    } catch (const json::parse_error& err) {
      throw ParseError(std::string("bad model JSON: ") + err.what(), err.byte);
    }
    m = build_model(spec, c.cap);
    r["config"]["model"] = spec;
  }
  r["certificate"] = certificate_json(m);
  return r;
}

json run_monodromy(const JobConfig& c) {
  const auto s = resolve(c);
  json r = base_report("monodromy", c);
  r["set"] = set_json(s);
  const auto primes = primes_up_to(c.prime_bound);
  std::vector<verify::CycleTypeObservation> obs;
  for (const auto& t0 : samples(c, s.fs)) obs.push_back(verify::sample_cycle_types(s.fs, t0, primes));
  std::set<verify::CycleTuple> tuples;
  for (const auto& o : obs) {
    if (!o.unramified()) continue;
    for (const auto& po : o.per_prime) {
      if (po.bad) continue;
      auto t = po.partitions;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (o.fiber_degrees[i] < o.degrees[i]) t[i].push_back(1);
      tuples.insert(std::move(t));
    }
  }
  r["cycle_types"] = json::array();
  for (const auto& t : tuples) r["cycle_types"].push_back(t);
  r["consistency"] = nullptr;
  if (const auto m = entry_model(s, c.cap)) {
    const auto cr = verify::group_consistency(obs, *m);
    r["consistency"] = {{"subset_ok", cr.subset_ok},
                        {"coverage", cr.coverage},
                        {"observed", cr.observed},
                        {"model", cr.model},
                        {"unexplained", cr.unexplained}};
  }
  return r;
}

json run_catalog(const JobConfig& c) {
  if (!c.exprs.empty()) throw DomainError("catalog takes an entry name");
  json r = base_report("catalog", c);
  if (c.catalog.empty()) {
    r["entries"] = catalog::entry_names();
    return r;
  }
  const auto e = catalog::entry(c.catalog);
  if (e.model) check_cap(e.model(), c.cap);
  json fs = json::array();
  for (const auto& f : e.functions) fs.push_back({{"label", f.label}, {"expr", format_ratfunc(f.f)}});
  r["set"] = fs;
  r["entry"] = e.name;
  r["note"] = e.note;
  catalog::VerifyOptions o;
  o.t0_samples = c.t0_samples;
  o.prime_bound = c.prime_bound;
  o.seed = c.seed;
  r["checks"] = json::array();
  for (const auto& ch : catalog::entry_verify(c.catalog, o).checks)
    r["checks"].push_back({{"check", ch.check}, {"pass", ch.pass}, {"detail", ch.detail}});
  return r;
}

int exit_code(const json& r) {
  if (!r.is_object()) return kUsage;
  if (r.contains("error")) {
    const auto& e = r["error"];
    return e.is_object() && e.value("kind", "") == "cap" ? kInconclusive : kUsage;
  }
  bool fail = false, inconclusive = false;
  for (const auto& t : r.value("per_t0", json::array())) {
    const auto bad = t.value("bad", json::array()).get<std::set<std::uint64_t>>();
    for (const auto& p : t.value("exceptional", json::array()))
      if (!bad.count(p.get<std::uint64_t>())) fail = true;
  }
  if (r.contains("certificate") && r["certificate"].is_object() && !r["certificate"].value("covered", false))
    fail = true;
  if (r.contains("padic") && !r["padic"].value("solvable", false)) fail = true;
  for (const auto& b : r.value("branch", json::array()))
    if (b.value("rh", 0) != 0) fail = true;
  if (r.contains("consistency") && r["consistency"].is_object() && !r["consistency"].value("subset_ok", false))
    fail = true;
  for (const auto& ch : r.value("checks", json::array()))
    if (!ch.value("pass", false)) fail = true;
  for (const auto& d : r.value("minimality", json::array()))
    if (!d.contains("witness") || d["witness"].is_null()) inconclusive = true;
  if (fail) return kFail;
  return inconclusive ? kInconclusive : kPass;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  const std::string command = r.value("command", "?");
  if (r.contains("error")) {
    os << command << ": error: " << r["error"].value("message", "") << '\n';
    return os.str();
  }
  for (const auto& f : r.value("set", json::array()))
    os << f.value("label", "") << " = " << f.value("expr", "") << '\n';
  if (r.contains("per_t0")) {
    std::size_t failed = 0;
    for (const auto& t : r["per_t0"]) failed += t.value("verdict", "") == "fail";
    os << "scan: " << r["per_t0"].size() << " t0 samples, B = " << r["config"].value("prime_bound", 0) << ", "
       << failed << " failing\n";
    if (r.contains("witness") && r["witness"].is_object())
      os << "witness: t0 = " << r["witness"]["t0"].get<std::string>() << ", p = " << r["witness"]["p"] << '\n';
  }
  for (const auto& d : r.value("minimality", json::array())) {
    os << "drop " << d.value("dropped", "") << ": ";
    if (d["witness"].is_object())
      os << "t0 = " << d["witness"]["t0"].get<std::string>() << ", p = " << d["witness"]["p"] << '\n';
    else
      os << "no witness\n";
  }
  if (r.contains("certificate") && r["certificate"].is_object()) {
    const auto& c = r["certificate"];
    os << "group order " << c["order"] << ": " << (c["covered"].get<bool>() ? "covered" : "not covered") << ", "
       << (c["minimal"].get<bool>() ? "minimal" : "not minimal") << '\n';
    if (c["witness"].is_string()) os << "uncovered element " << c["witness"].get<std::string>() << '\n';
  }
  if (r.contains("padic")) {
    const auto& q = r["padic"];
    os << "t0 = " << q["t0"].get<std::string>() << " is " << (q["solvable"].get<bool>() ? "" : "not ")
       << "a Q_" << q["p"] << "-value\n";
  }
  for (const auto& b : r.value("branch", json::array())) {
    os << b.value("label", "") << ": degree " << b["degree"] << ", rh " << b["rh"] << '\n';
    for (const auto& pt : b["points"]) os << "  " << pt["at"].get<std::string>() << ' ' << partition_text(pt["partition"]) << '\n';
  }
  if (r.contains("cycle_types")) os << r["cycle_types"].size() << " distinct cycle-type tuples observed\n";
  if (r.contains("consistency") && r["consistency"].is_object()) {
    const auto& c = r["consistency"];
    os << "model: " << c["observed"] << " of " << c["model"] << " tuples seen, "
       << (c["subset_ok"].get<bool>() ? "all explained" : "some unexplained") << '\n';
  }
  if (r.contains("entries"))
    for (const auto& n : r["entries"]) os << n.get<std::string>() << '\n';
  for (const auto& ch : r.value("checks", json::array()))
    os << (ch["pass"].get<bool>() ? "ok   " : "FAIL ") << ch["check"].get<std::string>() << ": "
       << ch["detail"].get<std::string>() << '\n';
  static const char* names[] = {"pass", "fail", "inconclusive", "error"};
  os << "verdict: " << names[exit_code(r)] << '\n';
  return os.str();
}

}  // namespace locrep::cli
