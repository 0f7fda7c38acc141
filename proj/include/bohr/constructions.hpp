#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bohr/poly_json.hpp"
#include "bohr/polynomial.hpp"
#include "bohr/walsh.hpp"

namespace bohr {

enum class MatrixKind { hadamard, schur };

std::string_view to_string(MatrixKind kind);
// Throws ConfigError for anything but "hadamard" or "schur".
MatrixKind parse_matrix_kind(std::string_view name);

// Hadamard needs q to be a power of two (ConfigError otherwise).
WalshMatrix walsh_matrix(MatrixKind kind, std::size_t q);

inline constexpr unsigned kMaxRudinShapiro = 24;
inline constexpr unsigned kMaxDirichletRudinShapiro = 15;

struct RudinShapiroPair {
  MultiPolynomial p;
  MultiPolynomial q;
};

struct DirichletRudinShapiroPair {
  DirichletPolynomial p;
  DirichletPolynomial q;
};

// P_0 = Q_0 = 1, P_{k+1} = P_k + z^{2^k} Q_k, Q_{k+1} = P_k - z^{2^k} Q_k.
RudinShapiroPair rudin_shapiro(unsigned n);

// Same recursion with the shift z^{2^k} replaced by p_{k+1}^{-s}.
DirichletRudinShapiroPair dirichlet_rudin_shapiro(unsigned n);

inline constexpr std::uint64_t kDefaultTermBudget = 10'000'000;

// The q-tuple (P_d^(1), ..., P_d^(q)) in r = qd variables: d rounds of
// "multiply component j by the fresh variable z_{kq+j}" followed by the
// action of the Walsh matrix. Throws ResourceError when q^d exceeds the
// budget.
std::vector<MultiPolynomial> bh_tuple(std::size_t q, unsigned d, MatrixKind kind,
                                      std::uint64_t term_budget = kDefaultTermBudget);

struct BHOutput {
  std::size_t q = 0;
  unsigned d = 0;
  MatrixKind kind = MatrixKind::hadamard;
  std::size_t index = 1;  // i in 1..q
  MultiPolynomial poly;
  // Filled in by bh_pullback().
  std::optional<DirichletPolynomial> pullback;
  // q^{(d+1)/2}
  double declared_sup_upper = 0.0;
  // Largest frequency of the pullback.
  std::uint64_t spectrum_max = 0;
  // p_{qd}^d, the a priori bound on the spectrum.
  std::uint64_t spectrum_bound = 0;
};

// Component i (1-based) of bh_tuple(); pullback fields left empty.
BHOutput bh_generate(std::size_t q, unsigned d, MatrixKind kind, std::size_t i,
                     std::uint64_t term_budget = kDefaultTermBudget);

// Substitutes z_j = p_j^{-s}. Throws FrequencyOverflow when p_{qd}^d does
// not fit in 63 bits.
BHOutput bh_pullback(BHOutput out);

// Envelope {q, d, matrix, i, declared_sup_upper, spectrum_max, spectrum_bound, poly, pullback}.
Json to_json(const BHOutput& out);

}  // namespace bohr
