#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bohr/bohr_lift.hpp"
#include "bohr/constructions.hpp"
#include "bohr/errors.hpp"
#include "bohr/norms.hpp"
#include "bohr/parallel.hpp"

using namespace bohr;

namespace {

const double kRootTwo = std::sqrt(2.0);

MultiPolynomial bh22() { return bh_generate(2, 2, MatrixKind::hadamard, 1).poly; }

MultiPolynomial univariate(const std::vector<Complex>& coeffs) {
  std::vector<Coefficient> dense;
  for (const auto& c : coeffs) dense.push_back(Coefficient::general(c));
  return MultiPolynomial::univariate(dense);
}

Complex eval_at_angles(const MultiPolynomial& p, const std::vector<double>& theta) {
  std::vector<Complex> z;
  for (double t : theta) z.push_back(std::polar(1.0, t));
  return evaluate(p, z);
}

}  // namespace

TEST_CASE("grid lower bound examples") {
  const MultiPolynomial z1 = MultiPolynomial::variable(0, 1);
  for (std::size_t n : {1, 2, 7, 64}) CHECK(*sup_lower_grid(z1, n).lower == doctest::Approx(1.0).epsilon(1e-15));

  const NormCertificate c = sup_lower_grid(bh22(), 32, 3);
  CHECK(*c.lower >= 2.828);
  CHECK(*c.lower <= 2.0 * kRootTwo + 1e-12);

  const MultiPolynomial rs2 = rudin_shapiro(2).p;
  const double lower = *sup_lower_grid(rs2, 256).lower;
  CHECK(lower <= std::pow(2.0, 1.5) + 1e-12);
  CHECK(lower >= 2.6);
}

TEST_CASE("phase reduction shrinks the swept dimension") {
  CHECK(active_variables(bh22()).size() == 2);
  CHECK(active_variables(MultiPolynomial::variable(3, 5)).empty());
  CHECK(active_variables(rudin_shapiro(3).p).size() == 1);
  MultiPolynomial p(3);
  p.add_term({0, 0, 0}, Coefficient::one());
  p.add_term({1, 0, 0}, Coefficient::one());
  p.add_term({0, 1, 0}, Coefficient::one());
  p.add_term({0, 0, 1}, Coefficient::one());
  CHECK(active_variables(p).size() == 3);
}

TEST_CASE("witness realizes the lower bound") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPolynomial p(3);
    for (int k = 0; k < 5; ++k) {
      p.add_term({static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                  static_cast<std::uint32_t>(rng() % 3)},
                 Coefficient::general(std::polar(1.0, 0.37 * static_cast<double>(rng() % 17))));
    }
    const NormCertificate g = sup_lower_grid(p, 16, 2);
    REQUIRE(g.witness.size() == 3);
    REQUIRE(std::abs(eval_at_angles(p, g.witness)) >= *g.lower - 1e-12);
    const NormCertificate u = sup_upper_lipschitz(p, 16);
    REQUIRE(*u.lower <= *u.upper);
    REQUIRE(std::abs(eval_at_angles(p, u.witness)) >= *u.lower - 1e-12);
  }
}

TEST_CASE("Lipschitz upper bound examples") {
  const NormCertificate c = sup_upper_lipschitz(MultiPolynomial::constant(Coefficient::general(-3.0, 4.0), 2), 8);
  CHECK(*c.upper == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(c.lipschitz_constant == 0.0);

  const NormCertificate z = sup_upper_lipschitz(MultiPolynomial::variable(0, 1), 64);
  CHECK(*z.upper <= 1.0 + 2.0 * std::numbers::pi / 64.0);
  CHECK(*z.upper >= 1.0);

  GridOptions shifted;
  shifted.shift = LatticeShift::always;
  const NormCertificate b = sup_upper_lipschitz(bh22(), 128, shifted);
  CHECK(b.randomized);
  CHECK(*b.upper >= 2.0 * kRootTwo);
  CHECK(*b.upper <= 1.1 * 2.0 * kRootTwo);
}

TEST_CASE("certificate sandwich on univariate polynomials") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t degree = 1 + rng() % 8;
    std::vector<Complex> coeffs;
    for (std::size_t k = 0; k <= degree; ++k) {
      coeffs.push_back(std::polar(0.25 + static_cast<double>(rng() % 8) / 4.0, 0.1 * static_cast<double>(rng() % 63)));
    }
    const MultiPolynomial p = univariate(coeffs);
    const auto scan = oracle::dense_scan(coeffs, 100000);
    const double lower = *sup_lower_grid(p, 1024, 3).lower;
    const double upper = *sup_upper_lipschitz(p, 1024).upper;
    REQUIRE(lower <= scan.max + scan.error);
    REQUIRE(upper >= scan.max);
  }
}

TEST_CASE("monotone refinement on nested lattices") {
  const MultiPolynomial p = bh22();
  double prev_lower = 0.0;
  double prev_upper = INFINITY;
  for (std::size_t n = 2; n <= 512; n *= 2) {
    GridOptions o;
    o.shift = LatticeShift::never;
    const NormCertificate u = sup_upper_lipschitz(p, n, o);
    const NormCertificate l = sup_lower_grid(p, n, 0, o);
    REQUIRE(*l.lower >= prev_lower);
    REQUIRE(*u.upper <= prev_upper + 1e-12);
    prev_lower = *l.lower;
    prev_upper = *u.upper;
  }
}

TEST_CASE("budget handling") {
  MultiPolynomial p(6);
  for (std::size_t j = 0; j < 6; ++j) {
    Exponents e(6, 0);
    e[j] = 1;
    p.add_term(e, Coefficient::one());
  }
  p.add_term(Exponents(6, 0), Coefficient::one());
  GridOptions small;
  small.budget = 1000;
  CHECK_THROWS_AS(sup_lower_grid(p, 64, 0, small), ResourceError);
  CHECK_THROWS_AS(sup_upper_lipschitz(p, 64, small), ResourceError);
  small.allow_random_fallback = true;
  small.fallback_samples = 5000;
  const NormCertificate c = sup_lower_grid(p, 64, 1, small);
  CHECK(c.random_fallback);
  CHECK(*c.lower <= 7.0 + 1e-12);
  CHECK(*c.lower > 5.0);
  CHECK_THROWS_AS(sup_upper_lipschitz(p, 64, small), ResourceError);
}

TEST_CASE("flow estimator examples") {
  const DirichletPolynomial two = DirichletPolynomial::term(2);
  CHECK(*sup_flow(two, 5.0, 100).lower == doctest::Approx(1.0).epsilon(1e-12));
  DirichletPolynomial f = DirichletPolynomial::constant(Coefficient::one());
  f.add_term(2, Coefficient::one());
  const NormCertificate c = sup_flow(f, 1.0, 2001);
  CHECK(*c.lower >= 2.0 - 1e-6);
  CHECK_FALSE(c.upper.has_value());
  // Step 2 pi / (20 log 2) over [-1000, 1000].
  const double step = 2.0 * std::numbers::pi / (20.0 * std::log(2.0));
  CHECK(std::abs(static_cast<double>(default_flow_samples(f, 1000.0)) - 2000.0 / step) <= 2.0);
}

TEST_CASE("flow estimator is nondecreasing in the horizon on nested grids") {
  DirichletPolynomial f;
  f.add_term(1, Coefficient::one());
  f.add_term(2, Coefficient::one());
  f.add_term(3, Coefficient::one());
  f.add_term(6, Coefficient::minus_one());
  double prev = 0.0;
  for (double t : {10.0, 20.0, 40.0, 80.0}) {
    // Same step 0.05 on every grid so each grid contains the previous one.
    const auto samples = static_cast<std::uint64_t>(std::llround(2.0 * t / 0.05)) + 1;
    const double v = *sup_flow(f, t, samples).lower;
    REQUIRE(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("flow matches the direct evaluation at the witness") {
  DirichletPolynomial f;
  f.add_term(3, Coefficient::root(1, 4));
  f.add_term(10, Coefficient::general(0.3, -0.2));
  f.add_term(29, Coefficient::one());
  const NormCertificate c = sup_flow(f, 2000.0, 400001);
  REQUIRE(c.witness.size() == 1);
  CHECK(std::abs(std::abs(evaluate(f, Complex(0.0, c.witness[0]))) - *c.lower) < 1e-9);
}

TEST_CASE("tuple identity") {
  const auto t22 = bh_tuple(2, 2, MatrixKind::hadamard);
  const TupleIdentityReport a = tuple_identity_check(t22, 1000, 1);
  CHECK(a.target == 8.0);
  CHECK(a.max_residual < 1e-9);

  const auto t31 = bh_tuple(3, 1, MatrixKind::schur);
  const TupleIdentityReport b = tuple_identity_check(t31, 1000, 2);
  CHECK(b.target == 9.0);
  CHECK(b.max_residual < 1e-9);

  const std::vector<MultiPolynomial> constants(4, MultiPolynomial::constant(Coefficient::one(), 0));
  const TupleIdentityReport c = tuple_identity_check(constants, 10, 3);
  CHECK(c.target == 4.0);
  CHECK(c.max_residual == 0.0);

  std::vector<MultiPolynomial> mismatched = t22;
  mismatched[1] = mismatched[1].padded(5);
  CHECK_THROWS_AS(tuple_identity_check(mismatched, 10, 4), DimensionError);
}

TEST_CASE("results do not depend on the thread count") {
  const MultiPolynomial p = bh_generate(3, 2, MatrixKind::schur, 2).poly;
  GridOptions o;
  o.shift = LatticeShift::always;
  o.seed = 99;
  set_thread_limit(1);
  const Json one = to_json(sup_upper_lipschitz(p, 24, o));
  set_thread_limit(4);
  const Json four = to_json(sup_upper_lipschitz(p, 24, o));
  set_thread_limit(0);
  CHECK(one.dump() == four.dump());
}
