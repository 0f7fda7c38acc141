#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bohr/coefficient.hpp"

namespace bohr {

using Complex = std::complex<double>;

// Frequencies n of n^{-s} are positive 64-bit integers bounded by 2^63 - 1.
inline constexpr std::uint64_t kMaxFrequency = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

// Finite Dirichlet polynomial sum_n a_n n^{-s}, stored sparsely by frequency.
// Zero coefficients are never stored.
class DirichletPolynomial {
 public:
  using TermMap = std::map<std::uint64_t, Coefficient>;

  DirichletPolynomial() = default;

  static DirichletPolynomial constant(const Coefficient& c);
  // c * n^{-s}
  static DirichletPolynomial term(std::uint64_t n, const Coefficient& c = Coefficient::one());

  // Accumulates c into the coefficient of n^{-s}. n must be in [1, kMaxFrequency].
  void add_term(std::uint64_t n, const Coefficient& c);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(std::uint64_t n) const;
  std::vector<std::uint64_t> spectrum() const;
  // Largest frequency in the spectrum, 0 when empty.
  std::uint64_t max_frequency() const;

  friend bool operator==(const DirichletPolynomial&, const DirichletPolynomial&) = default;

 private:
  TermMap terms_;
};

using Exponents = std::vector<std::uint32_t>;

// Sparse polynomial in var_count() complex variables z_1..z_r. Exponent
// vectors always have length var_count(); variable j (1-based in the maths)
// is index j-1 here. Terms iterate in lexicographic exponent order.
class MultiPolynomial {
 public:
  using TermMap = std::map<Exponents, Coefficient>;

  explicit MultiPolynomial(std::size_t var_count = 0) : var_count_(var_count) {}

  static MultiPolynomial constant(const Coefficient& c, std::size_t var_count = 0);
  // z_{index+1}, i.e. index is 0-based.
  static MultiPolynomial variable(std::size_t index, std::size_t var_count);
  // Univariate polynomial from dense coefficients c_0 + c_1 z + ...
  static MultiPolynomial univariate(std::span<const Coefficient> dense);

  // Accumulates c into the monomial z^alpha; alpha.size() must equal var_count().
  void add_term(const Exponents& alpha, const Coefficient& c);

  std::size_t var_count() const { return var_count_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const Exponents& alpha) const;

  // Max |alpha|_1 over the terms; 0 for the empty polynomial.
  std::uint32_t degree() const;
  bool is_homogeneous() const;
  // Same polynomial with trailing variables appended (r >= var_count()).
  MultiPolynomial padded(std::size_t r) const;
  // Drops trailing variables no term depends on.
  MultiPolynomial trimmed() const;

  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  std::size_t var_count_ = 0;
  TermMap terms_;
};

DirichletPolynomial add(const DirichletPolynomial& p, const DirichletPolynomial& q);
// Variable counts are padded to the larger of the two.
MultiPolynomial add(const MultiPolynomial& p, const MultiPolynomial& q);

DirichletPolynomial scale(const DirichletPolynomial& p, const Coefficient& c);
MultiPolynomial scale(const MultiPolynomial& p, const Coefficient& c);

// p * m^{-s}; throws FrequencyOverflow past kMaxFrequency.
DirichletPolynomial multiply_monomial(const DirichletPolynomial& p, std::uint64_t m);
// p * z^alpha; pads to max(var_count, alpha.size()).
MultiPolynomial multiply_monomial(const MultiPolynomial& p, const Exponents& alpha);

double wiener_norm(const DirichletPolynomial& p);
double wiener_norm(const MultiPolynomial& p);
// Number of terms when every coefficient is an exact root of unity, in which
// case it equals the Wiener norm exactly.
std::optional<std::uint64_t> exact_wiener_norm(const DirichletPolynomial& p);
std::optional<std::uint64_t> exact_wiener_norm(const MultiPolynomial& p);

double l2_norm(const DirichletPolynomial& p);
double l2_norm(const MultiPolynomial& p);

// sum_n a_n n^{-s}.
Complex evaluate(const DirichletPolynomial& p, Complex s);
// sum_alpha c_alpha z^alpha; z.size() must equal var_count().
Complex evaluate(const MultiPolynomial& p, std::span<const Complex> z);

// Terms with frequency <= n.
DirichletPolynomial partial_sum(const DirichletPolynomial& p, std::uint64_t n);

// (1/2T) int_{-T}^{T} |p(it)|^2 dt by uniform sampling with the given step.
double vertical_mean_square(const DirichletPolynomial& p, double horizon, double step = 0.01);

}  // namespace bohr
