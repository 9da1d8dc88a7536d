#include "locrep/verify/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "locrep/errors.hpp"
#include "locrep/exact/poly_fp.hpp"

namespace locrep::verify {

namespace {

// Runs body(i) for i < n on a small pool; results are stored by index so the
// merge order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

const std::vector<std::uint64_t>& primes_cached(std::uint64_t bound) {
  thread_local std::uint64_t cached_bound = 0;
  thread_local std::vector<std::uint64_t> cached;
  if (bound != cached_bound) {
    cached = primes_up_to(bound);
    cached_bound = bound;
  }
  return cached;
}

std::vector<padic::LocalSolver> solvers(const std::vector<RatFunc>& fs, const Rat& t0) {
  std::vector<padic::LocalSolver> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.emplace_back(f, t0);
  return out;
}

bool any_represents(const std::vector<padic::LocalSolver>& ss, std::uint64_t p) {
  return std::any_of(ss.begin(), ss.end(), [p](const padic::LocalSolver& s) { return s.represents(p); });
}

void push_unique(std::vector<Rat>& out, const Rat& r) {
  if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
}

}  // namespace

ScanReport scan_set(const std::vector<RatFunc>& fs, const Rat& t0, std::uint64_t prime_bound) {
  if (prime_bound < 2) throw DomainError("prime bound must be at least 2");
  ScanReport r;
  r.t0 = t0;
  r.prime_bound = prime_bound;
  r.bad = padic::bad_primes(fs, t0);
  const auto ss = solvers(fs, t0);
  for (std::uint64_t p : primes_cached(prime_bound)) {
    if (any_represents(ss, p)) continue;
    r.exceptional.push_back(p);
    if (!r.bad.contains(p) && !r.offending) r.offending = p;
  }
  r.pass = !r.offending;
  return r;
}

std::vector<Rat> rational_critical_values(const std::vector<RatFunc>& fs) {
  std::vector<Rat> critical;
  for (const auto& f : fs) {
    if (f.degree() < 2) continue;
    for (const auto& b : ram::critical_values(f).points)
      if (b.kind == ram::BranchPoint::Kind::Rational) push_unique(critical, b.value);
  }
  return critical;
}

std::vector<Rat> default_t0_samples(const std::vector<RatFunc>& fs, std::size_t count, std::uint64_t seed) {
  return default_t0_samples_from(rational_critical_values(fs), count, seed);
}

std::vector<Rat> default_t0_samples_from(const std::vector<Rat>& critical, std::size_t count, std::uint64_t seed) {
  std::vector<Rat> out = critical;
  auto add = [&](const Rat& r) {
    if (out.size() < count) push_unique(out, r);
  };
  for (const auto& c : critical) {
    add(c - 1);
    add(c + 1);
  }
  for (long k = 0; k <= 3; ++k) {
    add(Rat(k));
    add(Rat(-k));
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x74u};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  for (int guard = 0; out.size() < count && guard < 100000; ++guard) add(Rat(num(rng), den(rng)));
  return out;
}

AggregateReport check_locally_representing(const std::vector<RatFunc>& fs, const std::vector<Rat>& samples,
                                           std::uint64_t prime_bound) {
  if (samples.empty()) throw DomainError("no t0 samples");
  AggregateReport agg;
  agg.per_t0.resize(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { agg.per_t0[i] = scan_set(fs, samples[i], prime_bound); });
  for (const auto& r : agg.per_t0)
    if (!r.pass) {
      agg.pass = false;
      agg.witness = Witness{r.t0, *r.offending};
      break;
    }
  return agg;
}

bool MinimalityReport::minimal() const {
  return std::all_of(drops.begin(), drops.end(), [](const DropResult& d) { return d.witness.has_value(); });
}

MinimalityReport check_minimality(const std::vector<RatFunc>& fs, const std::vector<Rat>& samples,
                                  std::uint64_t prime_bound) {
  MinimalityReport report;
  report.drops.resize(fs.size());
  parallel_for(fs.size(), [&](std::size_t i) {
    std::vector<RatFunc> rest;
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (j != i) rest.push_back(fs[j]);
    DropResult d;
    d.index = i;
    for (const Rat& t0 : samples) {
      const auto bad = padic::bad_primes(rest, t0);
      const auto ss = solvers(rest, t0);
      for (std::uint64_t p : primes_cached(prime_bound)) {
        if (bad.contains(p) || any_represents(ss, p)) continue;
        const bool confirmed = std::none_of(rest.begin(), rest.end(),
                                            [&](const RatFunc& f) { return padic::is_kp_value(f, t0, p); });
        if (!confirmed) continue;
        d.witness = Witness{t0, p};
        break;
      }
      if (d.witness) break;
    }
    report.drops[i] = std::move(d);
  });
  return report;
}

bool CycleTypeObservation::unramified() const {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!squarefree[i]) return false;
    const int drop = degrees[i] - fiber_degrees[i];
    if (drop < 0 || drop > 1) return false;
  }
  return true;
}

CycleTypeObservation sample_cycle_types(const std::vector<RatFunc>& fs, const Rat& t0,
                                        const std::vector<std::uint64_t>& primes) {
  CycleTypeObservation obs;
  obs.t0 = t0;
  std::vector<Poly> reduced;
  for (const auto& f : fs) {
    const Poly fib = padic::integer_fiber(f, t0);
    const Poly sf = padic::integral_squarefree(fib);
    obs.degrees.push_back(f.degree());
    obs.fiber_degrees.push_back(std::max(fib.degree(), 0));
    obs.squarefree.push_back(sf.degree() == fib.degree());
    reduced.push_back(sf);
  }
  const auto bad = padic::bad_primes(fs, t0);
  for (std::uint64_t p : primes) {
    PrimeObservation o;
    o.p = p;
    o.bad = bad.contains(p);
    if (!o.bad)
      for (const auto& g : reduced) {
        ram::Partition part = g.degree() >= 1 ? degree_partition_mod_p(reduce_mod_p(g, p)) : ram::Partition{};
        std::sort(part.rbegin(), part.rend());
        o.partitions.push_back(std::move(part));
      }
    obs.per_prime.push_back(std::move(o));
  }
  return obs;
}

std::vector<CycleTuple> model_cycle_tuples(const perm::MarkedAction& model) {
  std::set<CycleTuple> tuples;
  for (const auto& g : model.group.elements()) {
    CycleTuple t;
    for (const auto& b : model.blocks) t.push_back(g.cycle_type(b.begin, b.end));
    tuples.insert(std::move(t));
  }
  return {tuples.begin(), tuples.end()};
}

ConsistencyReport group_consistency(const std::vector<CycleTypeObservation>& obs, const perm::MarkedAction& model) {
  std::set<CycleTuple> seen;
  for (const auto& o : obs) {
    if (o.degrees.size() != model.blocks.size()) throw DomainError("model has a different number of blocks");
    for (std::size_t i = 0; i < o.degrees.size(); ++i)
      if (static_cast<std::size_t>(o.degrees[i]) != model.blocks[i].size())
        throw DomainError("block " + model.blocks[i].label + " has size " + std::to_string(model.blocks[i].size()) +
                          ", function has degree " + std::to_string(o.degrees[i]));
    if (!o.unramified()) continue;
    for (const auto& po : o.per_prime) {
      if (po.bad) continue;
      CycleTuple t = po.partitions;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (o.fiber_degrees[i] < o.degrees[i]) t[i].push_back(1);
      seen.insert(std::move(t));
    }
  }
  const auto tuples = model_cycle_tuples(model);
  const std::set<CycleTuple> model_set(tuples.begin(), tuples.end());
  ConsistencyReport r;
  r.model = model_set.size();
  r.observed = seen.size();
  std::size_t hit = 0;
  for (const auto& t : seen) {
    if (model_set.count(t)) {
      ++hit;
    } else {
      r.subset_ok = false;
      r.unexplained.push_back(t);
    }
  }
  r.coverage = r.model ? static_cast<double>(hit) / static_cast<double>(r.model) : 0.0;
  return r;
}

perm::CoverReport certify_with_group(const perm::MarkedAction& model) { return perm::minimal_covering_check(model); }

}  // namespace locrep::verify
