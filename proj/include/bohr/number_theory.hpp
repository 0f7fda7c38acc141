#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bohr {

// Largest sieve limit accepted by primes_up_to().
inline constexpr std::uint64_t kSieveCap = 100'000'000;

// All primes up to a limit, ascending. Indexing follows the usual
// p_1 = 2, p_2 = 3, ... convention: nth(1) == 2.
class PrimeTable {
 public:
  PrimeTable() = default;

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  // p_j, 1-based. Throws DomainError when j is 0 or beyond the table.
  std::uint64_t nth(std::size_t j) const;

  // pi(x) for x <= limit(). Throws DomainError above the limit.
  std::size_t pi(std::uint64_t x) const;

  // 1-based index of the prime p, or 0 if p is not a prime in the table.
  std::size_t index_of(std::uint64_t p) const;

 private:
  friend PrimeTable primes_up_to(std::uint64_t x);
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

// Sieve of Eratosthenes. Requires 2 <= x <= kSieveCap.
PrimeTable primes_up_to(std::uint64_t x);

// Table holding at least the first `count` primes.
PrimeTable first_primes(std::size_t count);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization of n >= 1; primes strictly increasing.
class Factorization {
 public:
  Factorization() = default;
  Factorization(std::uint64_t n, std::vector<PrimePower> factors);

  std::uint64_t n() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }

  // Omega(n): number of prime factors counted with multiplicity.
  std::uint32_t omega() const;
  bool is_squarefree() const;
  // Largest prime divisor; DomainError for n = 1.
  std::uint64_t largest_prime() const;
  // Product of p^e; used to check the factorization.
  std::uint64_t recompose() const;

 private:
  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

Factorization factorize(std::uint64_t n);

bool is_squarefree(std::uint64_t n);
std::uint32_t omega(std::uint64_t n);
std::uint64_t p_plus(std::uint64_t n);

// Checked a * b against kMaxFrequency-style limits; returns false on overflow.
bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit, std::uint64_t& out);

}  // namespace bohr
