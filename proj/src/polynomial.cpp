#include "bohr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/number_theory.hpp"

namespace bohr {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

Complex ipow(Complex z, std::uint32_t e) {
  Complex result(1.0, 0.0);
  while (e > 0) {
    if (e & 1U) result *= z;
    z *= z;
    e >>= 1U;
  }
  return result;
}

}  // namespace

// --- DirichletPolynomial ----------------------------------------------------

DirichletPolynomial DirichletPolynomial::constant(const Coefficient& c) { return term(1, c); }

DirichletPolynomial DirichletPolynomial::term(std::uint64_t n, const Coefficient& c) {
  DirichletPolynomial p;
  p.add_term(n, c);
  return p;
}

void DirichletPolynomial::add_term(std::uint64_t n, const Coefficient& c) {
  if (n == 0) throw DomainError("Dirichlet frequencies must be positive");
  if (n > kMaxFrequency) throw FrequencyOverflow("frequency " + std::to_string(n) + " exceeds 2^63-1");
  accumulate(terms_, n, c);
}

Coefficient DirichletPolynomial::coefficient(std::uint64_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Coefficient::zero() : it->second;
}

std::vector<std::uint64_t> DirichletPolynomial::spectrum() const {
  std::vector<std::uint64_t> out;
  out.reserve(terms_.size());
  for (const auto& [n, c] : terms_) out.push_back(n);
  return out;
}

std::uint64_t DirichletPolynomial::max_frequency() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

// --- MultiPolynomial --------------------------------------------------------

MultiPolynomial MultiPolynomial::constant(const Coefficient& c, std::size_t var_count) {
  MultiPolynomial p(var_count);
  p.add_term(Exponents(var_count, 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(std::size_t index, std::size_t var_count) {
  if (index >= var_count) throw DimensionError("variable index outside var_count");
  Exponents alpha(var_count, 0);
  alpha[index] = 1;
  MultiPolynomial p(var_count);
  p.add_term(alpha, Coefficient::one());
  return p;
}

MultiPolynomial MultiPolynomial::univariate(std::span<const Coefficient> dense) {
  MultiPolynomial p(1);
  for (std::size_t k = 0; k < dense.size(); ++k) p.add_term({static_cast<std::uint32_t>(k)}, dense[k]);
  return p;
}

void MultiPolynomial::add_term(const Exponents& alpha, const Coefficient& c) {
  if (alpha.size() != var_count_) {
    throw DimensionError("exponent vector of length " + std::to_string(alpha.size()) + " for " +
                         std::to_string(var_count_) + " variables");
  }
  accumulate(terms_, alpha, c);
}

Coefficient MultiPolynomial::coefficient(const Exponents& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Coefficient::zero() : it->second;
}

std::uint32_t MultiPolynomial::degree() const {
  std::uint32_t deg = 0;
  for (const auto& [alpha, c] : terms_) {
    std::uint32_t d = 0;
    for (auto e : alpha) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

bool MultiPolynomial::is_homogeneous() const {
  std::optional<std::uint32_t> first;
  for (const auto& [alpha, c] : terms_) {
    std::uint32_t d = 0;
    for (auto e : alpha) d += e;
    if (!first) first = d;
    if (*first != d) return false;
  }
  return true;
}

MultiPolynomial MultiPolynomial::padded(std::size_t r) const {
  if (r < var_count_) throw DimensionError("cannot pad to fewer variables");
  if (r == var_count_) return *this;
  MultiPolynomial out(r);
  for (const auto& [alpha, c] : terms_) {
    Exponents beta = alpha;
    beta.resize(r, 0);
    out.terms_.emplace(std::move(beta), c);
  }
  return out;
}

MultiPolynomial MultiPolynomial::trimmed() const {
  std::size_t used = 0;
  for (const auto& [alpha, c] : terms_) {
    for (std::size_t j = alpha.size(); j > used; --j) {
      if (alpha[j - 1] != 0) {
        used = j;
        break;
      }
    }
  }
  MultiPolynomial out(used);
  for (const auto& [alpha, c] : terms_) {
    out.terms_.emplace(Exponents(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(used)), c);
  }
  return out;
}

// --- arithmetic -------------------------------------------------------------

DirichletPolynomial add(const DirichletPolynomial& p, const DirichletPolynomial& q) {
  DirichletPolynomial out = p;
  for (const auto& [n, c] : q.terms()) out.add_term(n, c);
  return out;
}

MultiPolynomial add(const MultiPolynomial& p, const MultiPolynomial& q) {
  const std::size_t r = std::max(p.var_count(), q.var_count());
  MultiPolynomial out = p.padded(r);
  const MultiPolynomial rhs = q.padded(r);
  for (const auto& [alpha, c] : rhs.terms()) out.add_term(alpha, c);
  return out;
}

DirichletPolynomial scale(const DirichletPolynomial& p, const Coefficient& c) {
  DirichletPolynomial out;
  for (const auto& [n, a] : p.terms()) out.add_term(n, a * c);
  return out;
}

MultiPolynomial scale(const MultiPolynomial& p, const Coefficient& c) {
  MultiPolynomial out(p.var_count());
  for (const auto& [alpha, a] : p.terms()) out.add_term(alpha, a * c);
  return out;
}

DirichletPolynomial multiply_monomial(const DirichletPolynomial& p, std::uint64_t m) {
  if (m == 0) throw DomainError("Dirichlet frequencies must be positive");
  DirichletPolynomial out;
  for (const auto& [n, a] : p.terms()) {
    std::uint64_t nm = 0;
    if (!checked_mul(n, m, kMaxFrequency, nm)) {
      throw FrequencyOverflow("frequency " + std::to_string(n) + " * " + std::to_string(m) + " exceeds 2^63-1");
    }
    out.add_term(nm, a);
  }
  return out;
}

MultiPolynomial multiply_monomial(const MultiPolynomial& p, const Exponents& alpha) {
  const std::size_t r = std::max(p.var_count(), alpha.size());
  Exponents shift = alpha;
  shift.resize(r, 0);
  MultiPolynomial out(r);
  const MultiPolynomial source = p.padded(r);
  for (const auto& [beta, a] : source.terms()) {
    Exponents gamma = beta;
    for (std::size_t j = 0; j < r; ++j) gamma[j] += shift[j];
    out.add_term(gamma, a);
  }
  return out;
}

namespace {

template <class Poly>
double wiener_impl(const Poly& p) {
  double sum = 0.0;
  for (const auto& [key, c] : p.terms()) sum += c.modulus();
  return sum;
}

template <class Poly>
std::optional<std::uint64_t> exact_wiener_impl(const Poly& p) {
  for (const auto& [key, c] : p.terms()) {
    if (!c.is_root()) return std::nullopt;
  }
  return p.terms().size();
}

template <class Poly>
double l2_impl(const Poly& p) {
  double sum = 0.0;
  for (const auto& [key, c] : p.terms()) {
    const double m = c.modulus();
    sum += m * m;
  }
  return std::sqrt(sum);
}

}  // namespace

double wiener_norm(const DirichletPolynomial& p) { return wiener_impl(p); }
double wiener_norm(const MultiPolynomial& p) { return wiener_impl(p); }
std::optional<std::uint64_t> exact_wiener_norm(const DirichletPolynomial& p) { return exact_wiener_impl(p); }
std::optional<std::uint64_t> exact_wiener_norm(const MultiPolynomial& p) { return exact_wiener_impl(p); }
double l2_norm(const DirichletPolynomial& p) { return l2_impl(p); }
double l2_norm(const MultiPolynomial& p) { return l2_impl(p); }

Complex evaluate(const DirichletPolynomial& p, Complex s) {
  Complex sum(0.0, 0.0);
  for (const auto& [n, a] : p.terms()) {
    if (n == 1) {
      sum += a.to_complex();
      continue;
    }
    const double x = static_cast<double>(n);
    const double logn = std::log(x);
    // n^{-s} = n^{-sigma} e^{-i t log n}
    const double modulus = std::pow(x, -s.real());
    sum += a.to_complex() * (s.imag() == 0.0 ? Complex(modulus, 0.0) : std::polar(modulus, -s.imag() * logn));
  }
  return sum;
}

Complex evaluate(const MultiPolynomial& p, std::span<const Complex> z) {
  if (z.size() != p.var_count()) {
    throw DimensionError("evaluation point has " + std::to_string(z.size()) + " coordinates, polynomial has " +
                         std::to_string(p.var_count()) + " variables");
  }
  Complex sum(0.0, 0.0);
  for (const auto& [alpha, a] : p.terms()) {
    Complex term = a.to_complex();
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] != 0) term *= ipow(z[j], alpha[j]);
    }
    sum += term;
  }
  return sum;
}

DirichletPolynomial partial_sum(const DirichletPolynomial& p, std::uint64_t n) {
  DirichletPolynomial out;
  for (const auto& [m, a] : p.terms()) {
    if (m > n) break;
    out.add_term(m, a);
  }
  return out;
}

double vertical_mean_square(const DirichletPolynomial& p, double horizon, double step) {
  if (!(horizon > 0.0) || !(step > 0.0)) throw DomainError("vertical_mean_square needs positive horizon and step");
  const auto samples = static_cast<std::size_t>(std::floor(2.0 * horizon / step)) + 1;
  double sum = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = -horizon + static_cast<double>(k) * step;
    sum += std::norm(evaluate(p, Complex(0.0, t)));
  }
  return sum / static_cast<double>(samples);
}

}  // namespace bohr
