#pragma once

#include <cstddef>
#include <vector>

#include "bohr/coefficient.hpp"
#include "bohr/polynomial.hpp"

namespace bohr {

// Dense q x q matrix of coefficients, row-major, 0-based indices.
class CoefficientMatrix {
 public:
  CoefficientMatrix() = default;
  CoefficientMatrix(std::size_t q, std::vector<Coefficient> entries);

  std::size_t size() const { return q_; }
  const Coefficient& operator()(std::size_t i, std::size_t j) const { return entries_[i * q_ + j]; }
  Coefficient& operator()(std::size_t i, std::size_t j) { return entries_[i * q_ + j]; }
  const std::vector<Coefficient>& entries() const { return entries_; }

  friend bool operator==(const CoefficientMatrix&, const CoefficientMatrix&) = default;

 private:
  std::size_t q_ = 0;
  std::vector<Coefficient> entries_;
};

struct WalshReport {
  bool unimodular = false;
  bool orthogonal = false;
  // max over column pairs of |sum_i conj(a_ij) a_ij' - q delta_jj'|
  double max_residual = 0.0;
  // True when the orthogonality sums were computed in integers (+-1 entries).
  bool exact = false;

  bool ok() const { return unimodular && orthogonal; }
};

// Checks that every entry is an exact root of unity and A*A = qI. The sums
// are exact integers when all entries are +-1, otherwise complex with a
// 1e-12 tolerance.
WalshReport verify_walsh(const CoefficientMatrix& a);

// q x q unimodular matrix with A*A = qI. Only constructible from matrices
// that pass verify_walsh().
class WalshMatrix {
 public:
  explicit WalshMatrix(CoefficientMatrix m);

  std::size_t size() const { return m_.size(); }
  const Coefficient& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const CoefficientMatrix& matrix() const { return m_; }

 private:
  CoefficientMatrix m_;
};

inline constexpr unsigned kMaxHadamardOrder = 20;
// Dense storage limit: 2^12 x 2^12 entries.
inline constexpr unsigned kMaxDenseHadamardOrder = 12;

// Sylvester block recursion A_0 = [1], A_{k+1} = [[A_k, A_k], [A_k, -A_k]].
WalshMatrix hadamard(unsigned k);

// a_ij = omega^{ij}, omega = e^{2 pi i/q}, i, j in 0..q-1.
WalshMatrix schur(std::size_t q);

// (Av)_i = sum_j a_ij v_j.
std::vector<Complex> apply(const WalshMatrix& a, std::span<const Complex> v);

}  // namespace bohr
