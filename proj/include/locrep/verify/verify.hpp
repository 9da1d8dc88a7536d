#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locrep/exact/ratfunc.hpp"
#include "locrep/padic/padic.hpp"
#include "locrep/perm/action.hpp"
#include "locrep/ramification/ramification.hpp"

namespace locrep::verify {

struct Witness {
  Rat t0;
  std::uint64_t p = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ScanReport {
  Rat t0;
  std::uint64_t prime_bound = 0;
  // Primes p <= prime_bound at which no function takes the value t0 over Q_p.
  std::vector<std::uint64_t> exceptional;
  padic::BadPrimeSet bad;
  bool pass = true;
  // Least exceptional prime outside the bad set.
  std::optional<std::uint64_t> offending;
};

ScanReport scan_set(const std::vector<RatFunc>& fs, const Rat& t0, std::uint64_t prime_bound);

// Deterministic t0 list: rational critical values of every f (always kept),
// their neighbors c - 1 and c + 1, small integers, then rationals of height
// at most 50 drawn from a generator seeded with `seed`.
std::vector<Rat> default_t0_samples(const std::vector<RatFunc>& fs, std::size_t count, std::uint64_t seed = 0);
// The same list from precomputed rational_critical_values(fs).
std::vector<Rat> default_t0_samples_from(const std::vector<Rat>& critical, std::size_t count, std::uint64_t seed = 0);
// Distinct finite rational critical values of the functions of degree >= 2.
std::vector<Rat> rational_critical_values(const std::vector<RatFunc>& fs);

struct AggregateReport {
  std::vector<ScanReport> per_t0;
  bool pass = true;
  // First failing (t0, p) in sample order, then by p.
  std::optional<Witness> witness;
};

AggregateReport check_locally_representing(const std::vector<RatFunc>& fs, const std::vector<Rat>& samples,
                                           std::uint64_t prime_bound);

constexpr std::size_t kMinimalitySamples = 40;
constexpr std::uint64_t kMinimalityPrimeBound = 2000;

struct DropResult {
  std::size_t index = 0;
  // (t0, p) with p outside the bad set of the remaining functions and no
  // remaining function representing t0 at p; re-checked with is_kp_value.
  std::optional<Witness> witness;
};

struct MinimalityReport {
  std::vector<DropResult> drops;
  // Every drop has a witness.
  bool minimal() const;
  // Some drop has none: the search was inconclusive for it.
  bool inconclusive() const { return !minimal(); }
};

MinimalityReport check_minimality(const std::vector<RatFunc>& fs, const std::vector<Rat>& samples,
                                  std::uint64_t prime_bound = kMinimalityPrimeBound);

struct PrimeObservation {
  std::uint64_t p = 0;
  bool bad = false;
  // Degree partition of the squarefree fiber of each function mod p, empty
  // when bad.
  std::vector<ram::Partition> partitions;
};

struct CycleTypeObservation {
  Rat t0;
  std::vector<int> degrees;        // deg f_i
  std::vector<int> fiber_degrees;  // deg (g_i - t0 h_i)
  std::vector<bool> squarefree;    // whether g_i - t0 h_i is squarefree
  std::vector<PrimeObservation> per_prime;

  // Whether the mod-p partitions (padded with a fixed point for a simple
  // point at infinity) are Frobenius cycle types.
  bool unramified() const;
};

CycleTypeObservation sample_cycle_types(const std::vector<RatFunc>& fs, const Rat& t0,
                                        const std::vector<std::uint64_t>& primes);

// One partition per block.
using CycleTuple = std::vector<ram::Partition>;

struct ConsistencyReport {
  bool subset_ok = true;
  double coverage = 0;
  std::size_t observed = 0;  // distinct tuples seen
  std::size_t model = 0;     // distinct tuples of the model
  std::vector<CycleTuple> unexplained;
};

// Throws DomainError when block sizes differ from the function degrees.
ConsistencyReport group_consistency(const std::vector<CycleTypeObservation>& obs, const perm::MarkedAction& model);
std::vector<CycleTuple> model_cycle_tuples(const perm::MarkedAction& model);

perm::CoverReport certify_with_group(const perm::MarkedAction& model);

}  // namespace locrep::verify
