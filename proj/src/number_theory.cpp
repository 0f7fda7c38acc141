#include "bohr/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n is odd, composite and has no factor below the trial bound.
std::uint64_t find_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_prime_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t g = find_factor(n);
  collect_prime_factors(g, out);
  collect_prime_factors(n / g, out);
}

}  // namespace

std::uint64_t PrimeTable::nth(std::size_t j) const {
  if (j == 0 || j > primes_.size()) {
    throw DomainError("prime index " + std::to_string(j) + " outside table of " +
                      std::to_string(primes_.size()) + " primes");
  }
  return primes_[j - 1];
}

std::size_t PrimeTable::pi(std::uint64_t x) const {
  if (x > limit_) {
    throw DomainError("pi(" + std::to_string(x) + ") beyond sieve limit " + std::to_string(limit_));
  }
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::size_t PrimeTable::index_of(std::uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return 0;
  return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

PrimeTable primes_up_to(std::uint64_t x) {
  if (x < 2) throw DomainError("primes_up_to: x must be at least 2");
  if (x > kSieveCap) {
    throw ResourceError("primes_up_to: limit " + std::to_string(x) + " exceeds sieve cap " +
                        std::to_string(kSieveCap));
  }
  std::vector<bool> composite(x + 1, false);
  PrimeTable table;
  table.limit_ = x;
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    table.primes_.push_back(i);
    if (i <= x / i) {
      for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
  }
  return table;
}

PrimeTable first_primes(std::size_t count) {
  // p_k < k (ln k + ln ln k) for k >= 6.
  double bound = 15.0;
  if (count >= 6) {
    const double k = static_cast<double>(count);
    bound = k * (std::log(k) + std::log(std::log(k))) + 1.0;
  }
  return primes_up_to(static_cast<std::uint64_t>(bound));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

std::uint32_t Factorization::omega() const {
  std::uint32_t total = 0;
  for (const auto& f : factors_) total += f.exponent;
  return total;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

std::uint64_t Factorization::largest_prime() const {
  if (factors_.empty()) throw DomainError("P+(1) is undefined");
  return factors_.back().prime;
}

std::uint64_t Factorization::recompose() const {
  std::uint64_t n = 1;
  for (const auto& f : factors_) {
    for (std::uint32_t e = 0; e < f.exponent; ++e) n *= f.prime;
  }
  return n;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<std::uint64_t> primes;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p < 1000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  collect_prime_factors(m, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<PrimePower> factors;
  for (std::uint64_t p : primes) {
    if (!factors.empty() && factors.back().prime == p) {
      ++factors.back().exponent;
    } else {
      factors.push_back({p, 1});
    }
  }
  return Factorization(n, std::move(factors));
}

bool is_squarefree(std::uint64_t n) { return factorize(n).is_squarefree(); }

std::uint32_t omega(std::uint64_t n) { return factorize(n).omega(); }

std::uint64_t p_plus(std::uint64_t n) {
  if (n < 2) throw DomainError("p_plus requires n >= 2");
  return factorize(n).largest_prime();
}

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > limit) return false;
  out = r;
  return true;
}

}  // namespace bohr
