#include "psc/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace psc::nt {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Sufficient witness set for all n < 2^64.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

u64 factor_effort() {
  if (const char* s = std::getenv("PSC_FACTOR_EFFORT")) {
    char* end = nullptr;
    u64 v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) return v;
  }
  return 20'000'000;  // rho iterations per split; generous for paper-scale inputs
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Brent's cycle-finding variant of Pollard rho on 64-bit values.
u64 rho_u64(u64 n, u64 seed) {
  if (n % 2 == 0) return 2;
  u64 y = seed % n, c = 1 + seed % (n - 1), m = 128;
  u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
    for (u64 k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = (mulmod(y, y, n) + c) % n;
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = (mulmod(ys, ys, n) + c) % n;
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_rec_u64(u64 n, std::vector<u64>& out) {
  while (n > 1) {
    if (is_prime(n)) {
      out.push_back(n);
      return;
    }
    u64 d = n;
    for (u64 seed = 2; d == n; ++seed) d = rho_u64(n, seed);
    factor_rec_u64(d, out);
    n /= d;
  }
}

// rho on mpz for values beyond 64 bits
Nat rho_mpz(const Nat& n, unsigned long seed, u64 max_iter) {
  Nat x = seed, y = seed, c = seed | 1, d = 1, diff;
  for (u64 i = 0; i < max_iter; ++i) {
    x = (x * x + c) % n;
    y = (y * y + c) % n;
    y = (y * y + c) % n;
    diff = x > y ? x - y : y - x;
    if (diff == 0) return 1;  // cycle without factor; caller reseeds
    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    if (d != 1 && d != n) return d;
  }
  return 0;  // effort exhausted
}

void factor_rec_mpz(Nat n, std::vector<Nat>& out) {
  if (n == 1) return;
  if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
    std::vector<u64> small;
    factor_rec_u64(mpz_get_ui(n.get_mpz_t()), small);
    for (u64 p : small) out.emplace_back(Nat(static_cast<unsigned long>(p)));
    return;
  }
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  // perfect power?
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      Nat root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
        std::vector<Nat> base;
        factor_rec_mpz(root, base);
        for (unsigned i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
        return;
      }
    }
  }
  const u64 effort = factor_effort();
  Nat d = 0;
  for (unsigned long seed = 3; d == 0 || d == 1; seed += 2) {
    if (seed > 41)
      throw ResourceLimit("factorize: rho effort cap exceeded on a " +
                          std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) + "-digit composite");
    d = rho_mpz(n, seed, effort);
  }
  factor_rec_mpz(d, out);
  factor_rec_mpz(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const Nat& n) {
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) return is_prime(mpz_get_ui(n.get_mpz_t()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factorize_u64(u64 n) {
  if (n == 0) throw InvalidInput("factorize: n must be >= 1");
  Factorization f;
  f.value = Nat(static_cast<unsigned long>(n));
  std::vector<u64> primes;
  // strip small factors first, rho handles the rest
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) primes.push_back(p), n /= p;
  }
  if (n > 1) factor_rec_u64(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == Nat(static_cast<unsigned long>(p)))
      ++f.factors.back().second;
    else
      f.factors.emplace_back(Nat(static_cast<unsigned long>(p)), 1);
  }
  return f;
}

Factorization factorize(const Nat& n) {
  if (n < 1) throw InvalidInput("factorize: n must be >= 1");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) return factorize_u64(mpz_get_ui(n.get_mpz_t()));
  Factorization f;
  f.value = n;
  Nat rest = n;
  std::vector<Nat> primes;
  for (u64 p = 2; p < 10'000; p = (p == 2 ? 3 : p + 2)) {
    if (!is_prime(p)) continue;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(Nat(static_cast<unsigned long>(p)));
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  factor_rec_mpz(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (const Nat& p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(p, 1);
  }
  return f;
}

std::vector<u64> prime_set(const Nat& n) {
  Factorization f = factorize(n);
  std::vector<u64> out;
  out.reserve(f.factors.size());
  for (const auto& [p, e] : f.factors) {
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 64)
      throw InvalidInput("prime_set: prime factor exceeds 64 bits");
    out.push_back(mpz_get_ui(p.get_mpz_t()));
  }
  return out;
}

std::vector<u64> prime_set_u64(u64 n) {
  Factorization f = factorize_u64(n);
  std::vector<u64> out;
  out.reserve(f.factors.size());
  for (const auto& [p, e] : f.factors) out.push_back(mpz_get_ui(p.get_mpz_t()));
  return out;
}

u64 multiplicative_order(const Nat& q, u64 r) {
  if (!is_prime(r)) throw InvalidInput("multiplicative_order: modulus must be prime");
  if (mpz_divisible_ui_p(q.get_mpz_t(), r)) throw InvalidInput("multiplicative_order: r divides q");
  u64 qr = mpz_fdiv_ui(q.get_mpz_t(), r);
  // order divides r-1; strip prime factors of r-1 while q^(d/p) stays 1
  u64 d = r - 1;
  for (u64 p : prime_set_u64(r - 1)) {
    while (d % p == 0 && powmod(qr, d / p, r) == 1) d /= p;
  }
  return d;
}

u64 multiplicative_order(u64 q, u64 r) {
  return multiplicative_order(Nat(static_cast<unsigned long>(q)), r);
}

Nat pow_nat(u64 base, unsigned exp) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

PpdResult primitive_prime_divisors(u64 a, unsigned n) {
  if (a < 2 || n < 1) throw InvalidInput("primitive_prime_divisors: need a >= 2, n >= 1");
  PpdResult res;
  res.base = a;
  res.exponent = n;
  if (a == 2 && (n == 1 || n == 6)) res.exception = PpdException::A2N1or6;
  if (n == 2) {
    u64 s = a + 1;
    if ((s & (s - 1)) == 0) res.exception = PpdException::NEq2FermatLike;
  }
  Nat value = pow_nat(a, n) - 1;
  std::vector<unsigned> proper;  // maximal proper divisors n/p of n
  for (u64 p : prime_set_u64(n == 1 ? 1 : n)) proper.push_back(n / static_cast<unsigned>(p));
  for (const auto& [prime, e] : factorize(value).factors) {
    bool primitive = true;
    for (unsigned d : proper) {
      Nat pow, base = a;
      mpz_powm_ui(pow.get_mpz_t(), base.get_mpz_t(), d, prime.get_mpz_t());
      if (pow == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) res.primitive_divisors.push_back(prime);
  }
  return res;
}

std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
  if (q < 2) return std::nullopt;
  if (is_prime(q)) return std::make_pair(q, 1u);
  // q = p^e with e >= 2 implies p <= q^(1/2) <= 2^32
  for (unsigned e = 2; e < 64; ++e) {
    u64 p = static_cast<u64>(std::llround(std::pow(double(q), 1.0 / e)));
    for (u64 cand = p > 1 ? p - 1 : 1; cand <= p + 1; ++cand) {
      if (cand < 2) continue;
      u64 v = 1;
      bool overflow = false;
      for (unsigned i = 0; i < e; ++i) {
        if (v > q / cand) {
          overflow = true;
          break;
        }
        v *= cand;
      }
      if (!overflow && v == q && is_prime(cand)) return std::make_pair(cand, e);
    }
  }
  return std::nullopt;
}

bool is_fermat_prime(u64 p) {
  if (!is_prime(p) || p < 3) return false;
  u64 m = p - 1;
  if (m & (m - 1)) return false;  // p-1 must be a power of two
  u64 x = 0;
  while (m > 1) m >>= 1, ++x;
  return x == 1 || (x & (x - 1)) == 0;  // exponent itself a power of two
}

bool is_mersenne_prime(u64 p) {
  if (!is_prime(p)) return false;
  u64 m = p + 1;
  if (m & (m - 1)) return false;
  u64 l = 0;
  while (m > 1) m >>= 1, ++l;
  return is_prime(l);
}

ConsecutiveClass classify_consecutive_prime_powers(u64 n) {
  if (n < 2) throw InvalidInput("classify_consecutive_prime_powers: n >= 2 required");
  if (n == 8) return ConsecutiveClass::EightNine;
  if (!prime_power_decompose(n) || !prime_power_decompose(n + 1))
    return ConsecutiveClass::NotBothPrimePowers;
  if (is_fermat_prime(n + 1) && (n & (n - 1)) == 0) return ConsecutiveClass::FermatPair;
  if (is_mersenne_prime(n) && ((n + 1) & n) == 0) return ConsecutiveClass::MersennePair;
  return ConsecutiveClass::NotBothPrimePowers;
}

bool q2_has_two_prime_divisors(u64 q) {
  if (q < 4 || !prime_power_decompose(q))
    throw InvalidInput("q2_has_two_prime_divisors: q must be a prime power >= 4");
  auto a = prime_set_u64(q - 1);
  auto b = prime_set_u64(q + 1);
  std::vector<u64> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u.size() == 2;
}

u64 sum_primes_upto(u64 n) {
  if (n < 2) return 0;
  Sieve sieve(n);
  u64 sum = 0;
  for (u64 p : sieve.primes()) sum += p;
  return sum;
}

DioCase diophantine_exception(u64 p, unsigned a, u64 r, unsigned b) {
  if (!is_prime(p) || !is_prime(r) || a < 2 || b < 2)
    throw InvalidInput("diophantine_exception: need p, r prime and a, b > 1");
  Nat lhs = pow_nat(p, a) - 2 * pow_nat(r, b);
  if (lhs != 1 && lhs != -1) return DioCase::NoSolution;
  if (p == 239 && a == 2 && r == 13 && b == 4) return DioCase::Listed239;
  if (p == 3 && a == 5 && r == 11 && b == 2) return DioCase::Listed3to5;
  if (a == 2 && b == 2) return DioCase::SquareCase;
  throw InvariantViolation("diophantine_exception: solution outside the lemma's cases");
}

Sieve::Sieve(u64 limit) : spf_(limit + 1, 0) {
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (u64 j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = i;
      }
    }
  }
}

std::vector<u64> Sieve::prime_set(u64 n) const {
  std::vector<u64> out;
  while (n > 1) {
    u64 p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> Sieve::primes() const {
  std::vector<u64> out;
  for (u64 i = 2; i < spf_.size(); ++i) {
    if (spf_[i] == i) out.push_back(i);
  }
  return out;
}

std::vector<u64> prime_prefix_sums(u64 limit) {
  Sieve sieve(limit);
  std::vector<u64> out(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) out[i] = out[i - 1] + (sieve.is_prime(i) ? i : 0);
  return out;
}

std::vector<u64> q2_two_divisor_scan_serial(u64 limit) {
  std::vector<u64> out;
  for (u64 q = 4; q <= limit; ++q) {
    if (!prime_power_decompose(q)) continue;
    if (q2_has_two_prime_divisors(q)) out.push_back(q);
  }
  return out;
}

std::vector<u64> q2_two_divisor_scan(u64 limit) {
  Sieve sieve(limit + 1);
  std::vector<char> hit(limit + 1, 0);
#ifdef PSC_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4096)
#endif
  for (u64 q = 4; q <= limit; ++q) {
    if (!prime_power_decompose(q)) continue;
    auto a = sieve.prime_set(q - 1);
    auto b = sieve.prime_set(q + 1);
    std::vector<u64> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    if (u.size() == 2) hit[q] = 1;
  }
  std::vector<u64> out;
  for (u64 q = 4; q <= limit; ++q) {
    if (hit[q]) out.push_back(q);
  }
  return out;
}

}  // namespace psc::nt
