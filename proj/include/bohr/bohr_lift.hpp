#pragma once

#include "bohr/polynomial.hpp"

namespace bohr {

// Bohr correspondence: n = p_1^{a_1} ... p_r^{a_r} maps to z_1^{a_1} ... z_r^{a_r}.
//
// The variable count is the index of the largest prime dividing some
// frequency of the spectrum (0 for constants); trailing unused variables are
// not materialized. Coefficients are carried over unchanged.
MultiPolynomial lift(const DirichletPolynomial& f);

// Inverse substitution z_j = p_j^{-s}. Throws FrequencyOverflow when a
// product of primes exceeds kMaxFrequency.
DirichletPolynomial unlift(const MultiPolynomial& p);

// The Kronecker flow point (p_1^{-it}, ..., p_r^{-it}).
std::vector<Complex> flow_point(std::size_t var_count, double t);

}  // namespace bohr
