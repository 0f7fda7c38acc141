#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bohr/errors.hpp"
#include "bohr/number_theory.hpp"

using namespace bohr;

TEST_CASE("primes_up_to small tables") {
  const PrimeTable t10 = primes_up_to(10);
  REQUIRE(t10.size() == 4);
  CHECK(std::vector<std::uint64_t>(t10.primes().begin(), t10.primes().end()) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(t10.pi(10) == 4);
  const PrimeTable t2 = primes_up_to(2);
  CHECK(t2.size() == 1);
  CHECK(t2.pi(2) == 1);
  CHECK(primes_up_to(100).size() == 25);
  CHECK(primes_up_to(1000).size() == 168);
}

TEST_CASE("sieve agrees with trial division") {
  const auto expected = oracle::primes_trial(20000);
  const PrimeTable t = primes_up_to(20000);
  CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == expected);
}

TEST_CASE("prime indexing is 1-based") {
  const PrimeTable t = primes_up_to(100);
  CHECK(t.nth(1) == 2);
  CHECK(t.nth(2) == 3);
  CHECK(t.nth(25) == 97);
  CHECK(t.index_of(97) == 25);
  CHECK(t.index_of(91) == 0);
  CHECK_THROWS_AS(t.nth(0), DomainError);
  CHECK_THROWS_AS(t.nth(26), DomainError);
  CHECK_THROWS_AS(t.pi(101), DomainError);
}

TEST_CASE("first_primes covers the requested count") {
  for (std::size_t k : {1, 2, 5, 6, 12, 100, 5000}) {
    const PrimeTable t = first_primes(k);
    REQUIRE(t.size() >= k);
  }
  CHECK(first_primes(12).nth(12) == 37);
}

TEST_CASE("primes_up_to errors") {
  CHECK_THROWS_AS(primes_up_to(1), DomainError);
  CHECK_THROWS_AS(primes_up_to(0), DomainError);
  CHECK_THROWS_AS(primes_up_to(kSieveCap + 1), ResourceError);
}

TEST_CASE("pi is nondecreasing and jumps exactly at primes") {
  const PrimeTable t = primes_up_to(5000);
  for (std::uint64_t x = 3; x <= 5000; ++x) {
    const std::size_t jump = t.pi(x) - t.pi(x - 1);
    REQUIRE(jump == (oracle::is_prime_trial(x) ? 1U : 0U));
  }
}

TEST_CASE("factorize examples") {
  const Factorization f12 = factorize(12);
  REQUIRE(f12.factors().size() == 2);
  CHECK(f12.factors()[0].prime == 2);
  CHECK(f12.factors()[0].exponent == 2);
  CHECK(f12.factors()[1].prime == 3);
  CHECK(f12.factors()[1].exponent == 1);
  CHECK(f12.omega() == 3);
  CHECK(f12.largest_prime() == 3);
  CHECK_FALSE(f12.is_squarefree());

  const Factorization f21 = factorize(21);
  CHECK(f21.omega() == 2);
  CHECK(f21.largest_prime() == 7);
  CHECK(f21.is_squarefree());

  const Factorization f1 = factorize(1);
  CHECK(f1.factors().empty());
  CHECK(f1.omega() == 0);
  CHECK(f1.is_squarefree());
  CHECK_THROWS_AS(f1.largest_prime(), DomainError);
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("arithmetic functions") {
  CHECK(is_squarefree(10));
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_squarefree(1));
  CHECK(omega(1024) == 10);
  CHECK(omega(1) == 0);
  CHECK(p_plus(1024) == 2);
  CHECK(p_plus(21) == 7);
  CHECK_THROWS_AS(p_plus(1), DomainError);
}

TEST_CASE("factorization recomposes for 2..1e5") {
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    const Factorization f = factorize(n);
    REQUIRE(f.recompose() == n);
    std::uint64_t prev = 0;
    for (const auto& pp : f.factors()) {
      REQUIRE(pp.prime > prev);
      REQUIRE(pp.exponent >= 1);
      prev = pp.prime;
    }
    REQUIRE(f.largest_prime() == prev);
  }
}

TEST_CASE("large factorizations and primality") {
  CHECK(factorize(600851475143ULL).largest_prime() == 6857);
  const std::uint64_t big_prime = 18446744073709551557ULL;
  CHECK(is_prime(big_prime));
  CHECK(factorize(big_prime).factors().size() == 1);
  // Product of two 32-bit primes exercises Pollard-Brent.
  const std::uint64_t semi = 4294967291ULL * 4294967279ULL;
  const Factorization f = factorize(semi);
  REQUIRE(f.factors().size() == 2);
  CHECK(f.factors()[0].prime == 4294967279ULL);
  CHECK(f.factors()[1].prime == 4294967291ULL);
  CHECK(f.recompose() == semi);
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
  // Strong pseudoprimes to small bases.
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
}

TEST_CASE("Omega is completely additive") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const std::uint64_t m = 1 + rng() % 1000000;
    const std::uint64_t n = 1 + rng() % 1000000;
    REQUIRE(omega(m * n) == omega(m) + omega(n));
  }
}

TEST_CASE("checked_mul") {
  std::uint64_t out = 0;
  CHECK(checked_mul(6, 7, 100, out));
  CHECK(out == 42);
  CHECK_FALSE(checked_mul(11, 10, 100, out));
  CHECK_FALSE(checked_mul(1ULL << 40, 1ULL << 40, UINT64_MAX, out));
}
