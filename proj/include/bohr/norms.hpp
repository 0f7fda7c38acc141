#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bohr/poly_json.hpp"
#include "bohr/polynomial.hpp"

namespace bohr {

enum class NormMethod { grid, flow, lipschitz, declared };
std::string_view to_string(NormMethod m);

// Bounds on a sup norm together with how they were obtained.
//
// `lower` is always realized by `witness`: for grid/lipschitz the witness is
// a vector of angles theta with |P(e^{i theta})| >= lower, for flow it is the
// single ordinate t with |f(it)| >= lower. `upper`, when present, is a
// certified bound except for the flow method, which never sets it.
struct NormCertificate {
  NormMethod method = NormMethod::grid;
  std::optional<double> lower;
  std::optional<double> upper;
  std::vector<double> witness;

  std::size_t points_per_dim = 0;
  std::size_t refine_steps = 0;
  // Number of angle coordinates actually swept after the phase reduction.
  std::size_t active_dims = 0;
  double lipschitz_constant = 0.0;
  double horizon = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t evaluations = 0;
  bool randomized = false;
  bool random_fallback = false;
  std::uint64_t seed = 0;
};

Json to_json(const NormCertificate& c);

NormCertificate declared_certificate(double upper);

enum class LatticeShift { automatic, always, never };

struct GridOptions {
  // Maximum number of lattice points.
  std::uint64_t budget = 100'000'000;
  // Lower bounds only: sample random points instead of refusing oversize lattices.
  bool allow_random_fallback = false;
  std::uint64_t fallback_samples = 1'000'000;
  std::uint64_t seed = 0x5eedULL;
  // automatic: random lattice offset when at least 5 angles are swept.
  LatticeShift shift = LatticeShift::automatic;
};

// Angle coordinates that must be swept. |P(e^{i theta})| is unchanged along
// every direction phi with <alpha - beta, phi> = 0 for all exponents alpha,
// beta of P; the remaining coordinates can be pinned to 0 without changing
// the sup. Returned indices are 0-based variable indices.
std::vector<std::size_t> active_variables(const MultiPolynomial& p);

// Largest power of two n with n^dims <= budget, at most 65536, at least 2.
std::size_t default_points_per_dim(std::size_t dims, std::uint64_t budget = 1ULL << 22);

// max |P| over the lattice {offset + 2 pi k / n}^dims of the active angles,
// optionally improved by `refine_steps` passes of coordinate-wise
// golden-section ascent from the best lattice point.
NormCertificate sup_lower_grid(const MultiPolynomial& p, std::size_t points_per_dim, std::size_t refine_steps = 0,
                               const GridOptions& options = {});

// Certified sup bound: lattice max plus L * pi / n, where
// L = sum |c_beta| |beta|_1 over the phase-reduced polynomial bounds the
// gradient in the max-angle metric. The minimum is taken over the nested
// sublattices n, n/2, n/4, ... that the sweep visits anyway, so refining a
// lattice never loosens the bound. Refuses (ResourceError) oversize lattices.
NormCertificate sup_upper_lipschitz(const MultiPolynomial& p, std::size_t points_per_dim,
                                    const GridOptions& options = {});

// Samples per unit so that the fastest term n^{-it} is sampled at least 20
// times per period: step 2 pi / (20 log max_frequency).
std::uint64_t default_flow_samples(const DirichletPolynomial& f, double horizon);

// max |f(it)| on a uniform grid of `samples` points in [-T, T]. An estimate
// of the sup (Kronecker density), never an upper bound.
NormCertificate sup_flow(const DirichletPolynomial& f, double horizon, std::uint64_t samples);

struct TupleIdentityReport {
  double target = 0.0;  // q^{d+1}
  double max_residual = 0.0;
  std::size_t trials = 0;
};

// max over seeded random torus points of |sum_i |P_i(z)|^2 - q^{d+1}| with
// q the tuple size and d the largest component degree.
TupleIdentityReport tuple_identity_check(std::span<const MultiPolynomial> tuple, std::size_t trials,
                                         std::uint64_t seed);

}  // namespace bohr
