#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace locrep {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "a" or "a/b" and canonicalizes.
Rat parse_rat(const std::string& text);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// p-adic valuation; the valuation of zero is reported as a large sentinel.
inline constexpr int kInfiniteValuation = 1 << 30;
int valuation(const Int& x, std::uint64_t p);
int valuation(const Rat& x, std::uint64_t p);

Int mod_floor(const Int& x, const Int& m);
std::uint64_t mod_u64(const Int& x, std::uint64_t p);
std::uint64_t rat_mod_p(const Rat& x, std::uint64_t p);  // throws BadPrime
Int ipow(const Int& base, unsigned long e);
Int ipow(std::uint64_t base, unsigned long e);
Rat rpow(const Rat& base, unsigned long e);

bool is_square(const Int& x);
bool is_square(const Rat& x);

// Removes square factors of primes below `trial_bound` and a trailing perfect
// square cofactor; the result differs from x by a rational square.
Int squarefree_kernel(const Int& x, std::uint64_t trial_bound = 100000);

}  // namespace locrep
