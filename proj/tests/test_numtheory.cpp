#include <doctest.h>

#include <numeric>
#include <random>

#include "psc/numtheory.hpp"

using namespace psc;
using namespace psc::nt;

TEST_CASE("is_prime basics") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(257));
  CHECK(is_prime((u64{1} << 61) - 1));
  CHECK_FALSE(is_prime((u64{1} << 29) - 1));

  Sieve sieve(10'000);
  for (u64 n = 0; n <= 10'000; ++n) CHECK(is_prime(n) == sieve.is_prime(n));
}

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());

  auto f = factorize(172);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Nat, unsigned>{2, 2});
  CHECK(f.factors[1] == std::pair<Nat, unsigned>{43, 1});

  auto g = factorize((Nat{1} << 28) - 1);
  std::vector<Nat> primes;
  for (const auto& [p, e] : g.factors) {
    primes.push_back(p);
    CHECK(e == 1);
  }
  CHECK(primes == std::vector<Nat>{3, 5, 29, 43, 113, 127});
}

TEST_CASE("factorization invariants on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    u64 n = rng() % 1'000'000'000 + 1;
    auto f = factorize_u64(n);
    Nat prod = 1;
    Nat prev = 1;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > prev);
      prev = p;
      CHECK(is_prime(p.get_ui()));
      for (unsigned j = 0; j < e; ++j) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("prime_set") {
  CHECK(prime_set_u64(1).empty());
  CHECK(prime_set_u64(87) == std::vector<u64>{3, 29});
  CHECK(prime_set_u64(91) == std::vector<u64>{7, 13});
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(u64{2}, 29) == 28);
  CHECK(multiplicative_order(u64{283}, 71) == 2);
  CHECK(multiplicative_order(u64{9}, 2) == 1);
  CHECK_THROWS_AS(multiplicative_order(u64{29}, 29), InvalidInput);

  std::mt19937_64 rng(11);
  Sieve sieve(2000);
  auto primes = sieve.primes();
  for (int i = 0; i < 100; ++i) {
    u64 r = primes[rng() % primes.size()];
    u64 q = rng() % 10'000 + 2;
    if (q % r == 0) continue;
    u64 ord = multiplicative_order(q, r);
    CHECK((r - 1) % ord == 0);
    for (u64 m = 1; m <= 12; ++m) {
      Nat pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), q, m);
      bool divides = mpz_divisible_ui_p(Nat(pw - 1).get_mpz_t(), r) != 0;
      CHECK(divides == (m % ord == 0));
    }
  }
}

TEST_CASE("primitive prime divisors") {
  auto a26 = primitive_prime_divisors(2, 6);
  CHECK(a26.primitive_divisors.empty());
  CHECK(a26.exception == PpdException::A2N1or6);

  auto a24 = primitive_prime_divisors(2, 4);
  CHECK(a24.primitive_divisors == std::vector<Nat>{5});
  CHECK(a24.exception == PpdException::None);

  auto a32 = primitive_prime_divisors(3, 2);
  CHECK(a32.primitive_divisors.empty());
  CHECK(a32.exception == PpdException::NEq2FermatLike);
}

TEST_CASE("zsigmondy on a moderate grid") {
  for (u64 a = 2; a <= 40; ++a) {
    for (unsigned n = 2; n <= 10; ++n) {
      auto r = primitive_prime_divisors(a, n);
      if (r.primitive_divisors.empty()) CHECK(r.exception != PpdException::None);
      for (const auto& p : r.primitive_divisors) {
        Nat top;
        mpz_ui_pow_ui(top.get_mpz_t(), a, n);
        CHECK(mpz_divisible_p(Nat(top - 1).get_mpz_t(), p.get_mpz_t()));
        for (unsigned k = 1; k < n; ++k) {
          Nat lower;
          mpz_ui_pow_ui(lower.get_mpz_t(), a, k);
          CHECK_FALSE(mpz_divisible_p(Nat(lower - 1).get_mpz_t(), p.get_mpz_t()));
        }
      }
    }
  }
}

TEST_CASE("consecutive prime powers") {
  CHECK(classify_consecutive_prime_powers(8) == ConsecutiveClass::EightNine);
  CHECK(classify_consecutive_prime_powers(4) == ConsecutiveClass::FermatPair);
  CHECK(classify_consecutive_prime_powers(16) == ConsecutiveClass::FermatPair);
  CHECK(classify_consecutive_prime_powers(7) == ConsecutiveClass::MersennePair);
  CHECK(classify_consecutive_prime_powers(31) == ConsecutiveClass::MersennePair);
  CHECK(classify_consecutive_prime_powers(14) == ConsecutiveClass::NotBothPrimePowers);

  for (u64 n = 2; n <= 100'000; ++n) {
    auto c = classify_consecutive_prime_powers(n);
    bool both = prime_power_decompose(n) && prime_power_decompose(n + 1);
    CHECK((c != ConsecutiveClass::NotBothPrimePowers) == both);
    if (c == ConsecutiveClass::FermatPair) CHECK(is_fermat_prime(n + 1));
    if (c == ConsecutiveClass::MersennePair) CHECK(is_mersenne_prime(n));
  }
}

TEST_CASE("fermat and mersenne primes") {
  CHECK(is_fermat_prime(17));
  CHECK(is_mersenne_prime(7));
  CHECK_FALSE(is_fermat_prime(11));
  CHECK_FALSE(is_mersenne_prime(11));
  CHECK_FALSE(is_fermat_prime(9));
  CHECK_FALSE(is_mersenne_prime(2047));
}

TEST_CASE("q^2 - 1 divisor count") {
  CHECK(q2_has_two_prime_divisors(17));
  CHECK_FALSE(q2_has_two_prime_divisors(11));
  CHECK(q2_has_two_prime_divisors(4));
}

TEST_CASE("q2 scan kernels agree") {
  auto par = q2_two_divisor_scan(20'000);
  auto ser = q2_two_divisor_scan_serial(20'000);
  CHECK(par == ser);
  CHECK(par == std::vector<u64>{4, 5, 7, 8, 9, 17});
}

TEST_CASE("sum of primes") {
  CHECK(sum_primes_upto(2) == 2);
  CHECK(sum_primes_upto(11) == 28);
  CHECK(sum_primes_upto(10) == 17);
  for (u64 n = 3; n <= 10'000; ++n) CHECK(sum_primes_upto(n) > n);
}

TEST_CASE("a prime lies strictly between n and 6n/5") {
  Sieve sieve(130'000);
  for (u64 n = 25; n <= 100'000; ++n) {
    bool found = false;
    for (u64 m = n + 1; 5 * m < 6 * n; ++m) {
      if (sieve.is_prime(m)) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("diophantine exceptions") {
  CHECK(diophantine_exception(239, 2, 13, 4) == DioCase::Listed239);
  CHECK(diophantine_exception(3, 5, 11, 2) == DioCase::Listed3to5);
  CHECK(diophantine_exception(5, 2, 3, 3) == DioCase::NoSolution);
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decompose(243) == std::pair<u64, unsigned>{3, 5});
  CHECK(prime_power_decompose(1024) == std::pair<u64, unsigned>{2, 10});
  CHECK(prime_power_decompose(17) == std::pair<u64, unsigned>{17, 1});
  CHECK_FALSE(prime_power_decompose(12).has_value());
  CHECK_FALSE(prime_power_decompose(1).has_value());
}

TEST_CASE("prime prefix sums") {
  auto ps = prime_prefix_sums(30);
  CHECK(ps[2] == 2);
  CHECK(ps[10] == 17);
  CHECK(ps[30] == 129);
}
