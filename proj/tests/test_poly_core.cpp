#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bohr/errors.hpp"
#include "bohr/poly_json.hpp"
#include "bohr/polynomial.hpp"

using namespace bohr;

namespace {

MultiPolynomial z(std::size_t index, std::size_t r) { return MultiPolynomial::variable(index, r); }
MultiPolynomial one(std::size_t r) { return MultiPolynomial::constant(Coefficient::one(), r); }

bool all_exact(const MultiPolynomial& p) {
  for (const auto& [a, c] : p.terms()) {
    if (!c.is_exact()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("coefficients stay exact under multiplication") {
  const Coefficient w = Coefficient::root(1, 3);
  CHECK(w.is_root());
  CHECK((w * w * w) == Coefficient::one());
  CHECK((w * w) == Coefficient::root(2, 3));
  CHECK(Coefficient::root(2, 4) == Coefficient::minus_one());
  CHECK(Coefficient::root(-1, 4) == Coefficient::root(3, 4));
  CHECK(Coefficient::root(0, 7) == Coefficient::one());
  CHECK(Coefficient::root(1, 6).as_root().k == 1);
  CHECK(Coefficient::root(4, 6).as_root().m == 3);
  CHECK(w.modulus() == 1.0);
  CHECK((Coefficient::one() + Coefficient::minus_one()).is_zero());
  CHECK((Coefficient::root(1, 3) + Coefficient::root(5, 6)).is_zero());
  CHECK(-Coefficient::one() == Coefficient::minus_one());
  CHECK(Coefficient::root(1, 5).conj() == Coefficient::root(4, 5));
  CHECK(Coefficient::general(0.0, 0.0).is_zero());
  CHECK_THROWS_AS(Coefficient::root(1, 0), DomainError);
}

TEST_CASE("root conversion accuracy") {
  for (std::int64_t m = 1; m <= 64; ++m) {
    for (std::int64_t k = 0; k < m; ++k) {
      const auto z = Coefficient::root(k, m).to_complex();
      const long double angle = 2.0L * std::numbers::pi_v<long double> * k / m;
      const std::complex<long double> expect(std::cos(angle), std::sin(angle));
      REQUIRE(std::abs(std::complex<long double>(z) - expect) < 1e-15L);
    }
  }
  CHECK(Coefficient::root(1, 4).to_complex() == std::complex<double>(0.0, 1.0));
  CHECK(Coefficient::minus_one().to_complex() == std::complex<double>(-1.0, 0.0));
}

TEST_CASE("non-cancelling root sums fall back to general values") {
  const Coefficient two = Coefficient::one() + Coefficient::one();
  CHECK(two.is_general());
  CHECK(two.modulus() == doctest::Approx(2.0));
}

TEST_CASE("add, scale and multiply_monomial examples") {
  const MultiPolynomial a = add(one(1), z(0, 1));
  const MultiPolynomial b = add(one(1), scale(z(0, 1), Coefficient::minus_one()));
  const MultiPolynomial sum = add(a, b);
  REQUIRE(sum.size() == 1);
  CHECK(sum.coefficient({0}).to_complex() == std::complex<double>(2.0, 0.0));

  const MultiPolynomial shifted = multiply_monomial(a, Exponents{0, 1});
  CHECK(shifted.var_count() == 2);
  CHECK(shifted.size() == 2);
  CHECK(shifted.coefficient({0, 1}) == Coefficient::one());
  CHECK(shifted.coefficient({1, 1}) == Coefficient::one());

  const MultiPolynomial neg = scale(z(0, 1), Coefficient::root(1, 2));
  CHECK(neg.coefficient({1}) == Coefficient::minus_one());

  DirichletPolynomial f = DirichletPolynomial::term(2);
  f = multiply_monomial(f, 3);
  CHECK(f.spectrum() == std::vector<std::uint64_t>{6});
  CHECK_THROWS_AS(multiply_monomial(DirichletPolynomial::term(1ULL << 62), 2), FrequencyOverflow);
}

TEST_CASE("exactness closure on disjoint or cancelling sums") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    MultiPolynomial p(3);
    MultiPolynomial q(3);
    for (int k = 0; k < 6; ++k) {
      Exponents e{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                  static_cast<std::uint32_t>(rng() % 3)};
      const Coefficient c = Coefficient::root(static_cast<std::int64_t>(rng() % 12), 12);
      // Either a fresh monomial or the exact negation of an existing one.
      if (p.coefficient(e).is_zero()) p.add_term(e, c);
      const Coefficient existing = p.coefficient(e);
      if (q.coefficient(e).is_zero() && rng() % 2 == 0) q.add_term(e, -existing);
    }
    for (const auto& [e, c] : q.terms()) REQUIRE(p.coefficient(e) == -c);
    const MultiPolynomial s = add(p, q);
    REQUIRE(all_exact(s));
    REQUIRE(all_exact(scale(p, Coefficient::root(5, 12))));
    REQUIRE(all_exact(multiply_monomial(p, Exponents{1, 0, 2, 1})));
  }
}

TEST_CASE("Wiener and l2 norms") {
  const MultiPolynomial p = add(one(1), z(0, 1));
  CHECK(wiener_norm(p) == 2.0);
  CHECK(exact_wiener_norm(p).value() == 2);
  CHECK(l2_norm(p) == doctest::Approx(std::sqrt(2.0)));
  CHECK(l2_norm(MultiPolynomial(3)) == 0.0);
  CHECK(wiener_norm(DirichletPolynomial()) == 0.0);

  MultiPolynomial g(2);
  g.add_term({1, 0}, Coefficient::general(3.0, 4.0));
  CHECK_FALSE(exact_wiener_norm(g).has_value());
  CHECK(wiener_norm(g) == doctest::Approx(5.0));
}

TEST_CASE("norm ordering and triangle inequality") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    DirichletPolynomial p;
    DirichletPolynomial q;
    for (int k = 0; k < 5; ++k) {
      p.add_term(1 + rng() % 40, Coefficient::general(static_cast<double>(rng() % 7) - 3.0, 0.5));
      q.add_term(1 + rng() % 40, Coefficient::root(static_cast<std::int64_t>(rng() % 5), 5));
    }
    double max_mod = 0.0;
    for (const auto& [n, c] : p.terms()) max_mod = std::max(max_mod, c.modulus());
    REQUIRE(wiener_norm(p) >= l2_norm(p) - 1e-12);
    REQUIRE(l2_norm(p) >= max_mod - 1e-12);
    REQUIRE(wiener_norm(add(p, q)) <= wiener_norm(p) + wiener_norm(q) + 1e-12);
  }
  DirichletPolynomial a = DirichletPolynomial::term(2);
  DirichletPolynomial b = DirichletPolynomial::term(3, Coefficient::root(1, 3));
  CHECK(wiener_norm(add(a, b)) == wiener_norm(a) + wiener_norm(b));
}

TEST_CASE("Dirichlet evaluation examples") {
  const DirichletPolynomial two = DirichletPolynomial::term(2);
  for (double t : {-3.0, 0.0, 0.7, 100.0}) CHECK(std::abs(evaluate(two, Complex(0.0, t))) == doctest::Approx(1.0));
  DirichletPolynomial f = DirichletPolynomial::constant(Coefficient::one());
  f.add_term(2, Coefficient::one());
  CHECK(evaluate(f, 0.0) == Complex(2.0, 0.0));
  DirichletPolynomial g = DirichletPolynomial::constant(Coefficient::general(0.5));
  g.add_term(2, Coefficient::one());
  CHECK(evaluate(g, 2.0).real() == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("Dirichlet evaluation matches a naive sum") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    DirichletPolynomial f;
    std::vector<std::pair<std::uint64_t, oracle::Complex>> naive;
    for (int k = 0; k < 8; ++k) {
      const std::uint64_t n = 1 + rng() % 1000;
      if (!f.coefficient(n).is_zero()) continue;
      const Coefficient c = Coefficient::general(std::polar(1.0, 0.1 * static_cast<double>(rng() % 63)));
      f.add_term(n, c);
      naive.emplace_back(n, c.to_complex());
    }
    const Complex s(static_cast<double>(rng() % 300) / 100.0, static_cast<double>(rng() % 2000) / 10.0 - 100.0);
    REQUIRE(std::abs(evaluate(f, s) - oracle::eval_dirichlet_naive(naive, s)) < 1e-12);
  }
}

TEST_CASE("multivariate evaluation") {
  MultiPolynomial p(2);
  p.add_term({1, 1}, Coefficient::one());
  const std::vector<Complex> ii{Complex(0, 1), Complex(0, 1)};
  CHECK(std::abs(evaluate(p, ii) - Complex(-1.0, 0.0)) < 1e-15);

  MultiPolynomial q(4);
  q.add_term({1, 0, 1, 0}, Coefficient::one());
  q.add_term({0, 1, 1, 0}, Coefficient::one());
  q.add_term({1, 0, 0, 1}, Coefficient::one());
  q.add_term({0, 1, 0, 1}, Coefficient::minus_one());
  const std::vector<Complex> ones(4, 1.0);
  CHECK(evaluate(q, ones) == Complex(2.0, 0.0));

  MultiPolynomial c = add(q, MultiPolynomial::constant(Coefficient::general(0.25, -1.0), 4));
  const std::vector<Complex> zeros(4, 0.0);
  CHECK(evaluate(c, zeros) == Complex(0.25, -1.0));
  CHECK_THROWS_AS(evaluate(q, std::vector<Complex>(3, 1.0)), DimensionError);
  CHECK_THROWS_AS(q.add_term({1, 0}, Coefficient::one()), DimensionError);
}

TEST_CASE("degree and homogeneity") {
  MultiPolynomial p(3);
  p.add_term({1, 1, 0}, Coefficient::one());
  p.add_term({0, 0, 2}, Coefficient::one());
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  p.add_term({0, 0, 1}, Coefficient::one());
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.padded(5).var_count() == 5);
  CHECK(p.padded(5).trimmed() == p);
}

TEST_CASE("partial sums") {
  DirichletPolynomial f = DirichletPolynomial::constant(Coefficient::one());
  f.add_term(2, Coefficient::one());
  f.add_term(6, Coefficient::minus_one());
  CHECK(partial_sum(f, 3).spectrum() == std::vector<std::uint64_t>{1, 2});
  CHECK(partial_sum(f, 6) == f);
  CHECK(partial_sum(f, 1000) == f);
  CHECK(partial_sum(f, 0).empty());
}

TEST_CASE("frequency validation") {
  DirichletPolynomial f;
  CHECK_THROWS(f.add_term(0, Coefficient::one()));
  CHECK_THROWS_AS(f.add_term(kMaxFrequency + 1, Coefficient::one()), FrequencyOverflow);
  f.add_term(kMaxFrequency, Coefficient::one());
  CHECK(f.max_frequency() == kMaxFrequency);
}

TEST_CASE("vertical mean square approaches the l2 norm") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3; ++trial) {
    DirichletPolynomial f;
    for (int k = 0; k < 6; ++k) {
      f.add_term(1 + rng() % 30, Coefficient::general(std::polar(1.0 + static_cast<double>(rng() % 3), 0.3 * k)));
    }
    const double l2sq = l2_norm(f) * l2_norm(f);
    CHECK(std::abs(vertical_mean_square(f, 1e4) - l2sq) / l2sq < 0.02);
  }
}

TEST_CASE("JSON round trip and canonical text") {
  DirichletPolynomial f = DirichletPolynomial::term(10);
  f.add_term(14, Coefficient::root(1, 3));
  f.add_term(21, Coefficient::general(0.5, -0.25));
  const std::string text = dump_canonical(to_json(f));
  CHECK(text ==
        "{\"kind\":\"dirichlet\",\"terms\":[{\"n\":10,\"coeff\":{\"root\":[0,1]}},{\"n\":14,\"coeff\":{\"root\":[1,3]}},"
        "{\"n\":21,\"coeff\":{\"re\":0.5,\"im\":-0.25}}]}\n");
  CHECK(dirichlet_from_json(Json::parse(text)) == f);

  MultiPolynomial p(4);
  p.add_term({1, 0, 1, 0}, Coefficient::one());
  p.add_term({0, 1, 0, 1}, Coefficient::minus_one());
  const Json jp = to_json(p);
  CHECK(jp.dump() ==
        "{\"kind\":\"multi\",\"vars\":4,\"terms\":[{\"exp\":[0,1,0,1],\"coeff\":{\"root\":[1,2]}},"
        "{\"exp\":[1,0,1,0],\"coeff\":{\"root\":[0,1]}}]}");
  CHECK(multi_from_json(jp) == p);
  CHECK(std::holds_alternative<MultiPolynomial>(polynomial_from_json(jp)));

  const double awkward = 0.1 + 0.2;
  MultiPolynomial g(1);
  g.add_term({0}, Coefficient::general(awkward, 1.0 / 3.0));
  const MultiPolynomial back = multi_from_json(Json::parse(to_json(g).dump()));
  CHECK(back.coefficient({0}).as_general().re == awkward);
  CHECK(back.coefficient({0}).as_general().im == 1.0 / 3.0);
}

TEST_CASE("JSON schema violations") {
  CHECK_THROWS_AS(dirichlet_from_json(Json::parse(R"({"kind":"multi","vars":1,"terms":[]})")), ConfigError);
  CHECK_THROWS_AS(dirichlet_from_json(Json::parse(R"({"kind":"dirichlet","terms":[{"n":0,"coeff":{"zero":true}}]})")),
                  ConfigError);
  CHECK_THROWS_AS(dirichlet_from_json(Json::parse(R"({"kind":"dirichlet","terms":[],"extra":1})")), ConfigError);
  CHECK_THROWS_AS(multi_from_json(Json::parse(R"({"kind":"multi","vars":2,"terms":[{"exp":[1],"coeff":{"root":[0,1]}}]})")),
                  DimensionError);
  CHECK_THROWS_AS(coefficient_from_json(Json::parse(R"({"root":[1,0]})")), std::exception);
  CHECK(coefficient_from_json(Json::parse(R"({"root":[2,4]})")) == Coefficient::minus_one());
}
