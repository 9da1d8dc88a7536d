#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locrep/exact/ratfunc.hpp"
#include "locrep/perm/action.hpp"
#include "locrep/ramification/ramification.hpp"

namespace locrep::catalog {

// T_0 = 1, T_1 = X, T_{n+1} = 2 X T_n - T_{n-1}.
Poly chebyshev(int n);
// N/D with (X + s)^p = N + s D, s^2 = a. Throws DomainError for square a
// or p < 1.
RatFunc redei(long p, const Rat& a);

struct ExpectedPoint {
  std::string at;  // BranchPoint::label()
  ram::Partition partition;
};

struct FunctionSpec {
  std::string label;
  RatFunc f;
  int degree = 0;
  std::vector<ExpectedPoint> branch;  // every branch point, in critical_values order
};

struct CatalogEntry {
  std::string name;
  std::string note;
  std::vector<FunctionSpec> functions;
  // Blocks in function order; absent when no model is known.
  std::function<perm::MarkedAction()> model;
  bool minimal = true;
  // The model contains the monodromy group without being equal to it, so
  // cycle-type coverage is not expected to reach 1.
  bool model_is_overgroup = false;
  // Abstract entries carry a model and no functions.
  bool abstract = false;
  std::vector<std::string> checks;

  std::vector<RatFunc> rational_functions() const;
};

// Names with their default parameters, in a fixed order.
std::vector<std::string> entry_names();
// "intro-triple", "chebyshev-monomial(5)", "many-redei(7,2)",
// "quartic-resolvent(0,1)", "thm56-model(3)", ... Parameterless names of
// parameterized entries take the defaults. Throws DomainError for unknown
// names or bad parameters.
CatalogEntry entry(const std::string& name);

// Group models, also used by entries.
perm::MarkedAction intro_model();
perm::MarkedAction quartic_model();
perm::MarkedAction s6_model();
perm::MarkedAction icosahedral_pair_model();
perm::MarkedAction icosahedral_triple_model();
perm::MarkedAction m11_model(std::uint64_t seed = 0);
perm::MarkedAction chebyshev_monomial_model(std::uint32_t p);
perm::MarkedAction many_redei_model(std::uint32_t p, std::size_t r);
perm::MarkedAction thm56_model(std::uint32_t p, std::uint32_t q = 3);

// First (a, b) in a fixed search order for which X^4 + a X^2 + b X - t shows
// all five S_4 cycle types mod small primes.
std::pair<Rat, Rat> quartic_default();

struct VerifyOptions {
  std::size_t t0_samples = 25;
  std::uint64_t prime_bound = 1000;
  std::uint64_t consistency_bound = 5000;
  std::size_t minimality_samples = 40;
  std::uint64_t minimality_bound = 2000;
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct EntryReport {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const;
};

EntryReport entry_verify(const std::string& name, const VerifyOptions& options = {});

}  // namespace locrep::catalog
