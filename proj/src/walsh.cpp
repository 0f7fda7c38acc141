#include "bohr/walsh.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

CoefficientMatrix::CoefficientMatrix(std::size_t q, std::vector<Coefficient> entries)
    : q_(q), entries_(std::move(entries)) {
  if (entries_.size() != q_ * q_) throw DimensionError("matrix needs q*q entries");
}

WalshReport verify_walsh(const CoefficientMatrix& a) {
  const std::size_t q = a.size();
  WalshReport report;
  report.unimodular = true;
  bool signs_only = true;
  for (const auto& c : a.entries()) {
    if (!c.is_root()) {
      report.unimodular = false;
      signs_only = false;
    } else if (c.as_root().m > 2) {
      signs_only = false;
    }
  }

  if (signs_only) {
    report.exact = true;
    std::int64_t worst = 0;
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t jp = j; jp < q; ++jp) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < q; ++i) {
          sum += (a(i, j).as_root().k == a(i, jp).as_root().k) ? 1 : -1;
        }
        const std::int64_t target = j == jp ? static_cast<std::int64_t>(q) : 0;
        worst = std::max(worst, std::abs(sum - target));
      }
    }
    report.max_residual = static_cast<double>(worst);
    report.orthogonal = worst == 0;
    return report;
  }

  double worst = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t jp = j; jp < q; ++jp) {
      Complex sum(0.0, 0.0);
      for (std::size_t i = 0; i < q; ++i) sum += std::conj(a(i, j).to_complex()) * a(i, jp).to_complex();
      const double target = j == jp ? static_cast<double>(q) : 0.0;
      worst = std::max(worst, std::abs(sum - target));
    }
  }
  report.max_residual = worst;
  report.orthogonal = worst < 1e-12;
  return report;
}

WalshMatrix::WalshMatrix(CoefficientMatrix m) : m_(std::move(m)) {
  const WalshReport report = verify_walsh(m_);
  if (!report.ok()) {
    throw ConfigError("not a Walsh matrix (residual " + std::to_string(report.max_residual) + ")");
  }
}

WalshMatrix hadamard(unsigned k) {
  if (k > kMaxHadamardOrder) {
    throw ResourceError("hadamard order " + std::to_string(k) + " exceeds cap " + std::to_string(kMaxHadamardOrder));
  }
  if (k > kMaxDenseHadamardOrder) {
    throw ResourceError("hadamard order " + std::to_string(k) + " needs 4^" + std::to_string(k) +
                        " dense entries; limit is order " + std::to_string(kMaxDenseHadamardOrder));
  }
  CoefficientMatrix a(1, {Coefficient::one()});
  for (unsigned level = 0; level < k; ++level) {
    const std::size_t n = a.size();
    CoefficientMatrix next(2 * n, std::vector<Coefficient>(4 * n * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        next(i, j) = a(i, j);
        next(i, j + n) = a(i, j);
        next(i + n, j) = a(i, j);
        next(i + n, j + n) = -a(i, j);
      }
    }
    a = std::move(next);
  }
  return WalshMatrix(std::move(a));
}

WalshMatrix schur(std::size_t q) {
  if (q == 0) throw DomainError("schur matrix size must be positive");
  CoefficientMatrix a(q, std::vector<Coefficient>(q * q));
  const auto m = static_cast<std::int64_t>(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      a(i, j) = Coefficient::root(static_cast<std::int64_t>(i * j % q), m);
    }
  }
  return WalshMatrix(std::move(a));
}

std::vector<Complex> apply(const WalshMatrix& a, std::span<const Complex> v) {
  const std::size_t q = a.size();
  if (v.size() != q) throw DimensionError("vector length does not match matrix size");
  std::vector<Complex> out(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) out[i] += a(i, j).to_complex() * v[j];
  }
  return out;
}

}  // namespace bohr
