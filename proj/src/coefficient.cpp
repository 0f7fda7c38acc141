#include "bohr/coefficient.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

Coefficient Coefficient::root(std::int64_t k, std::int64_t m) {
  if (m <= 0) throw DomainError("root of unity order must be positive");
  k %= m;
  if (k < 0) k += m;
  const std::int64_t g = std::gcd(k, m);
  if (k == 0) return Coefficient(Root{0, 1});
  return Coefficient(Root{k / g, m / g});
}

Coefficient Coefficient::general(double re, double im) {
  if (re == 0.0 && im == 0.0) return zero();
  return Coefficient(General{re, im});
}

bool Coefficient::is_zero() const { return std::holds_alternative<Zero>(value_); }

std::complex<double> Coefficient::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  if (is_general()) return {as_general().re, as_general().im};
  const Root r = as_root();
  // Exact values on the axes; otherwise reduce to the angle of least modulus.
  if (4 * r.k % r.m == 0) {
    switch (4 * r.k / r.m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const std::int64_t k = 2 * r.k > r.m ? r.k - r.m : r.k;
  // Extended precision keeps the rounded result within an ulp of the true root.
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(r.m);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

double Coefficient::modulus() const {
  if (is_zero()) return 0.0;
  if (is_root()) return 1.0;
  return std::hypot(as_general().re, as_general().im);
}

Coefficient Coefficient::conj() const {
  if (is_zero()) return *this;
  if (is_root()) return root(-as_root().k, as_root().m);
  return general(as_general().re, -as_general().im);
}

Coefficient Coefficient::operator-() const { return *this * minus_one(); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero() || b.is_zero()) return Coefficient::zero();
  if (a.is_root() && b.is_root()) {
    const auto ra = a.as_root();
    const auto rb = b.as_root();
    const std::int64_t m = std::lcm(ra.m, rb.m);
    return Coefficient::root(ra.k * (m / ra.m) + rb.k * (m / rb.m), m);
  }
  return Coefficient::general(a.to_complex() * b.to_complex());
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_root() && b.is_root() && a == -b) return Coefficient::zero();
  return Coefficient::general(a.to_complex() + b.to_complex());
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

std::string Coefficient::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "0";
  } else if (is_root()) {
    os << "e(" << as_root().k << "/" << as_root().m << ")";
  } else {
    os.precision(17);
    os << "(" << as_general().re << "," << as_general().im << ")";
  }
  return os.str();
}

}  // namespace bohr
