#pragma once

#include <array>
#include <vector>

#include "butson/matrices.hpp"

namespace butson {

struct SymmetricEigen {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// 1e-12 * max(1, ||M||_F). Throws NotSymmetric for complex or asymmetric input.
SymmetricEigen jacobi_eigen(const ComplexMatrix& m);

/// Eigenvalues of a real symmetric matrix, ascending. Throws ConvergenceError
/// when some eigenpair residual ||M v - lambda v|| exceeds tol.
std::vector<double> eig_real_symmetric(const ComplexMatrix& m, double tol);

/// The claimed closed-form spectrum of the real family A2(a), evaluated as
/// written: the pair (1 + a + a^2 +- sqrt(a^2 (1 + a^2) + 5)) / sqrt 6, then
/// (+-sqrt(5 a^2 (a - 1)^2) + 2 - a (1 + a)) / (2 sqrt 6), each of the latter
/// with multiplicity two. Sorted ascending.
std::array<double, 6> closed_form_A2a(double a);

}  // namespace butson
