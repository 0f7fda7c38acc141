#include "bohr/bohr_lift.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/number_theory.hpp"

namespace bohr {

MultiPolynomial lift(const DirichletPolynomial& f) {
  std::vector<Factorization> factored;
  factored.reserve(f.size());
  std::uint64_t largest = 1;
  for (const auto& [n, c] : f.terms()) {
    factored.push_back(factorize(n));
    if (n > 1) largest = std::max(largest, factored.back().largest_prime());
  }
  if (largest == 1) {
    MultiPolynomial out(0);
    for (const auto& [n, c] : f.terms()) out.add_term({}, c);
    return out;
  }

  const PrimeTable table = primes_up_to(largest);
  const std::size_t r = table.pi(largest);
  MultiPolynomial out(r);
  auto fac = factored.begin();
  for (const auto& [n, c] : f.terms()) {
    Exponents alpha(r, 0);
    for (const auto& pp : fac->factors()) alpha[table.index_of(pp.prime) - 1] = pp.exponent;
    out.add_term(alpha, c);
    ++fac;
  }
  return out;
}

DirichletPolynomial unlift(const MultiPolynomial& p) {
  DirichletPolynomial out;
  if (p.var_count() == 0) {
    for (const auto& [alpha, c] : p.terms()) out.add_term(1, c);
    return out;
  }
  const PrimeTable table = first_primes(p.var_count());
  for (const auto& [alpha, c] : p.terms()) {
    std::uint64_t n = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      for (std::uint32_t e = 0; e < alpha[j]; ++e) {
        if (!checked_mul(n, table.nth(j + 1), kMaxFrequency, n)) {
          throw FrequencyOverflow("unlift: frequency for monomial exceeds 2^63-1");
        }
      }
    }
    out.add_term(n, c);
  }
  return out;
}

std::vector<Complex> flow_point(std::size_t var_count, double t) {
  std::vector<Complex> z(var_count);
  if (var_count == 0) return z;
  const PrimeTable table = first_primes(var_count);
  for (std::size_t j = 0; j < var_count; ++j) {
    z[j] = std::polar(1.0, -t * std::log(static_cast<double>(table.nth(j + 1))));
  }
  return z;
}

}  // namespace bohr
