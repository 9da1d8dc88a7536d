#include "locrep/exact/arith.hpp"

#include "locrep/errors.hpp"

namespace locrep {

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw DomainError("not a rational number: " + text);
  if (r.get_den() == 0) throw DomainError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Int z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

int valuation(const Int& x, std::uint64_t p) {
  if (x == 0) return kInfiniteValuation;
  Int y = x;
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rat& x, std::uint64_t p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t mod_u64(const Int& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  Int r, aa(std::to_string(a)), pp(std::to_string(p));
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw BadPrime("not invertible modulo " + std::to_string(p));
  return r.get_ui();
}

std::uint64_t rat_mod_p(const Rat& x, std::uint64_t p) {
  std::uint64_t d = mod_u64(Int(x.get_den()), p);
  if (d == 0) throw BadPrime("denominator divisible by " + std::to_string(p));
  auto n = static_cast<unsigned __int128>(mod_u64(Int(x.get_num()), p));
  return static_cast<std::uint64_t>(n * inv_mod(d, p) % p);
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int ipow(std::uint64_t base, unsigned long e) {
  return ipow(Int(std::to_string(base)), e);
}

Rat rpow(const Rat& base, unsigned long e) {
  Rat r(ipow(Int(base.get_num()), e), ipow(Int(base.get_den()), e));
  r.canonicalize();
  return r;
}

bool is_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_square(const Rat& x) {
  return is_square(Int(x.get_num())) && is_square(Int(x.get_den()));
}

Int squarefree_kernel(const Int& x, std::uint64_t trial_bound) {
  if (x == 0) return 0;
  Int rest = abs(x);
  Int out = sgn(x);
  for (std::uint64_t p : primes_up_to(trial_bound)) {
    if (rest == 1) break;
    int v = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++v;
    }
    if (v % 2 == 1) out *= static_cast<unsigned long>(p);
  }
  if (!is_square(rest)) out *= rest;
  return out;
}

}  // namespace locrep
