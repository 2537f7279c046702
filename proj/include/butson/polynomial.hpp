#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "butson/cyclo.hpp"
#include "butson/matrices.hpp"

namespace butson {

/// det(xI - H) with coefficients in Z[zeta_q], constant term first.
struct ExactPoly {
  int q = 1;
  std::vector<CycInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;
};

/// Characteristic polynomial of H / sqrt(n) with the radicals factored out.
///
/// The coefficient of x^k is e[k] * n^(-(degree - k) / 2). For a full
/// characteristic polynomial degree == n and e[k] is exactly the x^k
/// coefficient of det(xI - H). Factors of lower degree use the same
/// convention, so multiplying two scaled polynomials is a plain convolution
/// of their e vectors.
struct ScaledPoly {
  int n = 1;
  std::vector<CycInt> e;

  int degree() const { return static_cast<int>(e.size()) - 1; }
  int order() const { return e.front().order(); }

  /// Floating-point coefficients, constant term first.
  std::vector<std::complex<double>> numeric() const;
  std::complex<double> evaluate(std::complex<double> x) const;
  /// Every coefficient mapped into Z[zeta_m].
  ScaledPoly lift(int m) const;
  /// Coefficientwise complex conjugation.
  ScaledPoly conj() const;

  ScaledPoly operator*(const ScaledPoly& other) const;
};

/// Leibniz expansion over all n! permutations. Throws ShapeError for n > 8.
ExactPoly charpoly_exact(const CycMatrix& m);
ExactPoly charpoly_exact(const ButsonMatrix& b);

/// Throws ShapeError unless p.degree() == n.
ScaledPoly scale(const ExactPoly& p, int n);

/// Exact comparison after lifting both sides to a common cyclotomic order.
/// Throws ShapeError on different n or degree.
bool poly_eq(const ScaledPoly& a, const ScaledPoly& b);

/// A coefficient written as numerator * sqrt(radicand_num / radicand_den),
/// e.g. sqrt(2/3) (w - 1) or (1 + 2w) / 2.
struct DisplayCoefficient {
  CycInt numerator;
  std::int64_t radicand_num = 1;
  std::int64_t radicand_den = 1;
};

/// Converts written-out coefficients of a (factor of a) scaled characteristic
/// polynomial, constant term first, into the ScaledPoly convention. Each
/// radicand times n^(degree - k) must be the square of an integer; otherwise
/// std::invalid_argument is thrown.
ScaledPoly from_display(int n, std::span<const DisplayCoefficient> coeffs);

}  // namespace butson
