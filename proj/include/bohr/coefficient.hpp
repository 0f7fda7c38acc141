#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

namespace bohr {

// A polynomial coefficient that stays exact while the algebra allows it.
//
// Three forms: an exact root of unity e^{2 pi i k/m} stored as a reduced pair
// (0 <= k < m, gcd(k, m) = 1, with 1 stored as (0, 1)), an exact zero, or a
// general complex value. Products of roots stay roots; a sum of two roots
// stays exact only when they cancel, otherwise it falls back to General.
class Coefficient {
 public:
  struct Root {
    std::int64_t k = 0;
    std::int64_t m = 1;
    friend bool operator==(const Root&, const Root&) = default;
  };
  struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
  };
  struct General {
    double re = 0.0;
    double im = 0.0;
    friend bool operator==(const General&, const General&) = default;
  };

  // Default is the exact zero.
  Coefficient() = default;

  static Coefficient zero() { return Coefficient(); }
  static Coefficient one() { return root(0, 1); }
  static Coefficient minus_one() { return root(1, 2); }
  // e^{2 pi i k/m}; k may be any integer, m must be positive.
  static Coefficient root(std::int64_t k, std::int64_t m);
  static Coefficient general(double re, double im = 0.0);
  static Coefficient general(std::complex<double> z) { return general(z.real(), z.imag()); }

  bool is_zero() const;
  bool is_root() const { return std::holds_alternative<Root>(value_); }
  bool is_general() const { return std::holds_alternative<General>(value_); }
  // Exact zero or exact root.
  bool is_exact() const { return !is_general(); }

  const Root& as_root() const { return std::get<Root>(value_); }
  const General& as_general() const { return std::get<General>(value_); }

  std::complex<double> to_complex() const;
  double modulus() const;

  Coefficient conj() const;
  Coefficient operator-() const;

  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);

  // Structural equality: exact forms compare exactly, General compares values.
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  std::string to_string() const;

 private:
  explicit Coefficient(Root r) : value_(r) {}
  explicit Coefficient(General g) : value_(g) {}

  std::variant<Zero, Root, General> value_;
};

}  // namespace bohr
