#include "bohr/constructions.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "bohr/bohr_lift.hpp"
#include "bohr/errors.hpp"
#include "bohr/number_theory.hpp"

namespace bohr {

std::string_view to_string(MatrixKind kind) { return kind == MatrixKind::hadamard ? "hadamard" : "schur"; }

MatrixKind parse_matrix_kind(std::string_view name) {
  if (name == "hadamard") return MatrixKind::hadamard;
  if (name == "schur") return MatrixKind::schur;
  throw ConfigError("unknown matrix kind \"" + std::string(name) + "\" (expected hadamard or schur)");
}

WalshMatrix walsh_matrix(MatrixKind kind, std::size_t q) {
  if (kind == MatrixKind::schur) return schur(q);
  if (q == 0 || !std::has_single_bit(q)) {
    throw ConfigError("hadamard matrices need q to be a power of two, got " + std::to_string(q));
  }
  return hadamard(static_cast<unsigned>(std::countr_zero(q)));
}

RudinShapiroPair rudin_shapiro(unsigned n) {
  if (n > kMaxRudinShapiro) {
    throw ResourceError("rudin_shapiro: n = " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxRudinShapiro));
  }
  RudinShapiroPair pair{MultiPolynomial::constant(Coefficient::one(), 1),
                        MultiPolynomial::constant(Coefficient::one(), 1)};
  for (unsigned k = 0; k < n; ++k) {
    const MultiPolynomial shifted = multiply_monomial(pair.q, Exponents{1U << k});
    pair.q = add(pair.p, scale(shifted, Coefficient::minus_one()));
    pair.p = add(pair.p, shifted);
  }
  return pair;
}

DirichletRudinShapiroPair dirichlet_rudin_shapiro(unsigned n) {
  if (n > kMaxDirichletRudinShapiro) {
    throw FrequencyOverflow("dirichlet_rudin_shapiro: n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxDirichletRudinShapiro));
  }
  DirichletRudinShapiroPair pair{DirichletPolynomial::constant(Coefficient::one()),
                                 DirichletPolynomial::constant(Coefficient::one())};
  if (n == 0) return pair;
  const PrimeTable table = first_primes(n);
  for (unsigned k = 0; k < n; ++k) {
    const DirichletPolynomial shifted = multiply_monomial(pair.q, table.nth(k + 1));
    pair.q = add(pair.p, scale(shifted, Coefficient::minus_one()));
    pair.p = add(pair.p, shifted);
  }
  return pair;
}

namespace {

// base^exp, or nullopt once it passes limit.
std::optional<std::uint64_t> checked_power(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (unsigned e = 0; e < exp; ++e) {
    if (!checked_mul(out, base, limit, out)) return std::nullopt;
  }
  return out;
}

}  // namespace

std::vector<MultiPolynomial> bh_tuple(std::size_t q, unsigned d, MatrixKind kind, std::uint64_t term_budget) {
  if (q < 1) throw ConfigError("bh_tuple: q must be positive");
  const WalshMatrix a = walsh_matrix(kind, q);
  if (!checked_power(q, d, term_budget)) {
    throw ResourceError("bh_tuple: q^d = " + std::to_string(q) + "^" + std::to_string(d) +
                        " terms exceeds budget " + std::to_string(term_budget));
  }

  const std::size_t r = q * d;
  std::vector<MultiPolynomial> tuple(q, MultiPolynomial::constant(Coefficient::one(), r));
  for (unsigned round = 0; round < d; ++round) {
    std::vector<MultiPolynomial> shifted;
    shifted.reserve(q);
    for (std::size_t j = 0; j < q; ++j) {
      Exponents fresh(r, 0);
      fresh[round * q + j] = 1;
      shifted.push_back(multiply_monomial(tuple[j], fresh));
    }
    for (std::size_t i = 0; i < q; ++i) {
      MultiPolynomial next(r);
      for (std::size_t j = 0; j < q; ++j) {
        for (const auto& [alpha, c] : shifted[j].terms()) next.add_term(alpha, c * a(i, j));
      }
      tuple[i] = std::move(next);
    }
  }
  return tuple;
}

BHOutput bh_generate(std::size_t q, unsigned d, MatrixKind kind, std::size_t i, std::uint64_t term_budget) {
  if (q < 2) throw ConfigError("bh_generate: q must be at least 2");
  if (d < 1) throw ConfigError("bh_generate: d must be at least 1");
  if (i < 1 || i > q) throw ConfigError("bh_generate: component index must lie in 1..q");
  std::vector<MultiPolynomial> tuple = bh_tuple(q, d, kind, term_budget);
  BHOutput out;
  out.q = q;
  out.d = d;
  out.kind = kind;
  out.index = i;
  out.poly = std::move(tuple[i - 1]);
  out.declared_sup_upper = std::pow(static_cast<double>(q), (static_cast<double>(d) + 1.0) / 2.0);
  return out;
}

BHOutput bh_pullback(BHOutput out) {
  const std::size_t r = out.q * out.d;
  const PrimeTable table = first_primes(r);
  const auto bound = checked_power(table.nth(r), out.d, kMaxFrequency);
  if (!bound) {
    throw FrequencyOverflow("bh_pullback: p_" + std::to_string(r) + "^" + std::to_string(out.d) + " exceeds 2^63-1");
  }
  out.pullback = unlift(out.poly);
  out.spectrum_max = out.pullback->max_frequency();
  out.spectrum_bound = *bound;
  return out;
}

Json to_json(const BHOutput& out) {
  Json j;
  j["q"] = out.q;
  j["d"] = out.d;
  j["matrix"] = std::string(to_string(out.kind));
  j["i"] = out.index;
  j["declared_sup_upper"] = out.declared_sup_upper;
  j["spectrum_max"] = out.spectrum_max;
  j["spectrum_bound"] = out.spectrum_bound;
  const auto exact = exact_wiener_norm(out.poly);
  j["wiener"] = exact ? Json(*exact) : Json(wiener_norm(out.poly));
  j["poly"] = to_json(out.poly);
  if (out.pullback) j["pullback"] = to_json(*out.pullback);
  return j;
}

}  // namespace bohr
