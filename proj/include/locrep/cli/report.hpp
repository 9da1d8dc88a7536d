#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "locrep/exact/ratfunc.hpp"
#include "locrep/perm/action.hpp"

namespace locrep::cli {

using nlohmann::json;

enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct JobConfig {
  // Exactly one of exprs and catalog is set for commands that take a set.
  std::vector<std::string> exprs;
  std::string catalog;
  std::optional<Rat> t0;
  std::size_t t0_samples = 25;
  std::uint64_t prime_bound = 1000;
  std::uint64_t seed = 0;
  std::size_t cap = perm::kDefaultCap;
  std::optional<std::uint64_t> p;
  // Group construction JSON for the group command.
  std::string model;
};

// LOCREP_CAP when set to a positive integer, else `fallback`.
std::size_t cap_from_env(std::size_t fallback);

// Builds a marked action from
//   {"group": G, "blocks": [{"label": l, "natural": true}
//                           | {"label": l, "subgroup": H}
//                           | {"label": l, "kernel": H}]}
// where G and H are {"build": "symmetric" | "alternating" | "cyclic" |
// "dihedral", "n": n}, {"build": "agl1" | "pgl2" | "agammal1", "p": p},
// {"build": "mathieu11"}, {"build": "generators", "degree": n,
// "generators": [[images], ...]} or {"build": "wreath", "base": G, "t": t,
// "mode": "imprimitive" | "product"}. A subgroup block is the coset action,
// a kernel block the 2-point sign action. Throws DomainError on bad input
// and CapExceeded past `cap`.
perm::MarkedAction build_model(const json& spec, std::size_t cap);

// Each returns a report {command, set, config, ...}; failures of the checked
// property are recorded in the report, not thrown. ParseError and
// DomainError signal usage problems, CapExceeded an unfinished computation.
json run_check(const JobConfig& config);
json run_minimal(const JobConfig& config);
json run_padic(const JobConfig& config);
json run_branch(const JobConfig& config);
json run_group(const JobConfig& config);
json run_monodromy(const JobConfig& config);
json run_catalog(const JobConfig& config);

// Computed from the report fields alone:
//   1 if a t0 has an exceptional prime outside its bad primes, a
//     certificate is not covered, a p-adic query is unsolvable, a
//     Riemann-Hurwitz sum is off, observed cycle types leave the model or a
//     catalog check fails;
//   2 otherwise if a dropped function has no witness or "error" is "cap";
//   3 for any other "error";
//   0 otherwise.
int exit_code(const json& report);

std::string render_text(const json& report);

}  // namespace locrep::cli
