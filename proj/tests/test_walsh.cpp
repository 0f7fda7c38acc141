#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bohr/errors.hpp"
#include "bohr/walsh.hpp"

using namespace bohr;

TEST_CASE("hadamard examples") {
  const WalshMatrix h0 = hadamard(0);
  CHECK(h0.size() == 1);
  CHECK(h0(0, 0) == Coefficient::one());

  const WalshMatrix h1 = hadamard(1);
  CHECK(h1(0, 0) == Coefficient::one());
  CHECK(h1(0, 1) == Coefficient::one());
  CHECK(h1(1, 0) == Coefficient::one());
  CHECK(h1(1, 1) == Coefficient::minus_one());

  const WalshMatrix h2 = hadamard(2);
  CHECK(h2(3, 0) == Coefficient::one());
  CHECK(h2(3, 1) == Coefficient::minus_one());
  CHECK(h2(3, 2) == Coefficient::minus_one());
  CHECK(h2(3, 3) == Coefficient::one());
}

TEST_CASE("hadamard entries match the popcount formula") {
  for (unsigned k = 0; k <= 6; ++k) {
    const WalshMatrix h = hadamard(k);
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < h.size(); ++j) {
        REQUIRE(h(i, j).to_complex() == oracle::hadamard_entry(i, j));
        REQUIRE((h(i, j) == Coefficient::one() || h(i, j) == Coefficient::minus_one()));
      }
    }
  }
}

TEST_CASE("hadamard size caps") {
  CHECK_THROWS_AS(hadamard(kMaxHadamardOrder + 1), ResourceError);
  CHECK_THROWS_AS(hadamard(kMaxDenseHadamardOrder + 1), ResourceError);
}

TEST_CASE("schur examples") {
  CHECK(schur(1)(0, 0) == Coefficient::one());
  const WalshMatrix s2 = schur(2);
  const WalshMatrix h1 = hadamard(1);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(s2(i, j) == h1(i, j));
  }
  const WalshMatrix s3 = schur(3);
  const Coefficient w = Coefficient::root(1, 3);
  CHECK(s3(1, 1) == w);
  CHECK(s3(1, 2) == w * w);
  CHECK(s3(2, 1) == w * w);
  CHECK(s3(2, 2) == w);
  for (std::size_t j = 0; j < 3; ++j) CHECK(s3(0, j) == Coefficient::one());
  CHECK_THROWS_AS(schur(0), DomainError);
}

TEST_CASE("schur entries are q-th roots of unity") {
  for (std::size_t q = 1; q <= 12; ++q) {
    const WalshMatrix s = schur(q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        REQUIRE(s(i, j).is_root());
        const auto r = s(i, j).as_root();
        REQUIRE(static_cast<std::size_t>(q) % static_cast<std::size_t>(r.m) == 0);
        REQUIRE(std::abs(s(i, j).to_complex() - oracle::schur_entry(q, i, j)) < 1e-15);
      }
    }
  }
}

TEST_CASE("verify_walsh") {
  const WalshReport h = verify_walsh(hadamard(3).matrix());
  CHECK(h.ok());
  CHECK(h.exact);
  CHECK(h.max_residual == 0.0);

  const WalshReport s = verify_walsh(schur(5).matrix());
  CHECK(s.ok());
  CHECK(s.max_residual < 1e-12);

  CoefficientMatrix broken = hadamard(2).matrix();
  broken(1, 2) = -broken(1, 2);
  const WalshReport b = verify_walsh(broken);
  CHECK(b.unimodular);
  CHECK_FALSE(b.orthogonal);
  CHECK_THROWS_AS(WalshMatrix{broken}, ConfigError);

  CoefficientMatrix non_unimodular = hadamard(1).matrix();
  non_unimodular(0, 0) = Coefficient::general(1.0, 0.0);
  CHECK_FALSE(verify_walsh(non_unimodular).unimodular);
}

TEST_CASE("row action scales the l2 norm by q") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss;
  for (const WalshMatrix& a : {hadamard(1), hadamard(3), schur(3), schur(7)}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Complex> v(a.size());
      double norm_v = 0.0;
      for (auto& x : v) {
        x = Complex(gauss(rng), gauss(rng));
        norm_v += std::norm(x);
      }
      double norm_av = 0.0;
      for (const auto& x : bohr::apply(a, v)) norm_av += std::norm(x);
      REQUIRE(std::abs(norm_av - static_cast<double>(a.size()) * norm_v) < 1e-10 * std::max(1.0, norm_av));
    }
  }
}
