#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "psc/errors.hpp"

namespace psc::nt {

using u64 = std::uint64_t;
using Nat = mpz_class;

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

/// Baillie-PSW style probable-prime test for values beyond 64 bits.
bool is_probable_prime(const Nat& n);

struct Factorization {
  Nat value;
  std::vector<std::pair<Nat, unsigned>> factors;  // sorted by prime
};

/// Complete factorization: trial division below 10^4, perfect-power
/// detection, then Brent's rho. Throws ResourceLimit once the configured
/// effort (PSC_FACTOR_EFFORT iterations per split) is exhausted.
Factorization factorize(const Nat& n);
Factorization factorize_u64(u64 n);

/// Distinct prime divisors as 64-bit primes. Throws InvalidInput if a
/// prime factor does not fit in 64 bits.
std::vector<u64> prime_set(const Nat& n);
std::vector<u64> prime_set_u64(u64 n);

/// Smallest i with q^i = 1 mod r; requires r prime, r coprime to q.
u64 multiplicative_order(const Nat& q, u64 r);
u64 multiplicative_order(u64 q, u64 r);

enum class PpdException { None, A2N1or6, NEq2FermatLike };

struct PpdResult {
  u64 base = 0;
  unsigned exponent = 0;
  std::vector<Nat> primitive_divisors;
  PpdException exception = PpdException::None;
};

/// Primitive prime divisors of a^n - 1 (those dividing no a^k - 1, k < n),
/// with the two exceptional parameter patterns flagged.
PpdResult primitive_prime_divisors(u64 a, unsigned n);

enum class ConsecutiveClass { FermatPair, MersennePair, EightNine, NotBothPrimePowers };

/// Classifies the pair (n, n+1) when both are prime powers.
ConsecutiveClass classify_consecutive_prime_powers(u64 n);

bool is_fermat_prime(u64 p);
bool is_mersenne_prime(u64 p);

/// If q = p^e for a prime p, returns (p, e).
std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q);

/// True iff q^2 - 1 has exactly two distinct prime divisors (q >= 4 a prime power).
bool q2_has_two_prime_divisors(u64 q);

u64 sum_primes_upto(u64 n);

enum class DioCase { Listed239, Listed3to5, SquareCase, NoSolution };

/// Classifies solutions of p^a - 2 r^b = +-1 with a, b > 1.
DioCase diophantine_exception(u64 p, unsigned a, u64 r, unsigned b);

Nat pow_nat(u64 base, unsigned exp);

/// Smallest-prime-factor sieve.
class Sieve {
 public:
  explicit Sieve(u64 limit);
  u64 limit() const { return spf_.size() - 1; }
  bool is_prime(u64 n) const { return n >= 2 && spf_[n] == n; }
  u64 smallest_factor(u64 n) const { return spf_[n]; }
  std::vector<u64> prime_set(u64 n) const;  // distinct prime divisors, n <= limit
  std::vector<u64> primes() const;

 private:
  std::vector<u64> spf_;
};

/// Prefix sums of primes: result[i] = sum of primes <= i, for i <= limit.
std::vector<u64> prime_prefix_sums(u64 limit);

/// All prime powers q in [4, limit] with |pi(q^2-1)| = 2.
/// The parallel kernel walks a smallest-prime-factor sieve with OpenMP;
/// the serial reference factorizes q^2-1 directly.
std::vector<u64> q2_two_divisor_scan(u64 limit);
std::vector<u64> q2_two_divisor_scan_serial(u64 limit);

}  // namespace psc::nt
