#include "butson/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "butson/errors.hpp"

namespace butson {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[static_cast<std::size_t>(i * n + j)] * a[static_cast<std::size_t>(i * n + j)];
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(const ComplexMatrix& m) {
  if (!m.is_real()) throw NotSymmetric("matrix has non-real entries");
  if (!m.is_symmetric()) throw NotSymmetric("matrix is not symmetric");

  const int n = m.size();
  auto at = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  std::vector<double> a(static_cast<std::size_t>(n * n));
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  double frobenius = 0.0;
  for (int i = 0; i < n; ++i) {
    v[at(i, i)] = 1.0;
    for (int j = 0; j < n; ++j) {
      a[at(i, j)] = m(i, j).real();
      frobenius += a[at(i, j)] * a[at(i, j)];
    }
  }
  const double threshold = kOffDiagonalTolerance * std::max(1.0, std::sqrt(frobenius));

  int sweep = 0;
  while (off_diagonal_norm(a, n) >= threshold) {
    if (++sweep > kMaxSweeps) throw ConvergenceError("Jacobi iteration did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[at(p, q)];
        if (apq == 0.0) continue;
        // Rotation angle that annihilates a(p, q).
        const double theta = (a[at(q, q)] - a[at(p, p)]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[at(k, p)];
          const double akq = a[at(k, q)];
          a[at(k, p)] = c * akp - s * akq;
          a[at(k, q)] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[at(p, k)];
          const double aqk = a[at(q, k)];
          a[at(p, k)] = c * apk - s * aqk;
          a[at(q, k)] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[at(k, p)];
          const double vkq = v[at(k, q)];
          v[at(k, p)] = c * vkp - s * vkq;
          v[at(k, q)] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[at(x, x)] < a[at(y, y)]; });

  SymmetricEigen result;
  result.sweeps = sweep;
  for (int k : order) {
    result.values.push_back(a[at(k, k)]);
    std::vector<double> column(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) column[static_cast<std::size_t>(i)] = v[at(i, k)];
    result.vectors.push_back(std::move(column));
  }
  return result;
}

std::vector<double> eig_real_symmetric(const ComplexMatrix& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  SymmetricEigen eig = jacobi_eigen(m);
  const int n = m.size();
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = -eig.values[k] * eig.vectors[k][static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) row += m(i, j).real() * eig.vectors[k][static_cast<std::size_t>(j)];
      residual += row * row;
    }
    if (std::sqrt(residual) > tol) throw ConvergenceError("eigenpair residual exceeds tolerance");
  }
  return eig.values;
}

std::array<double, 6> closed_form_A2a(double a) {
  const double root6 = std::sqrt(6.0);
  const double s = 1.0 + a + a * a;
  const double r = std::sqrt(a * a * (1.0 + a * a) + 5.0);
  const double t = std::sqrt(5.0 * a * a * (a - 1.0) * (a - 1.0));
  const double base = 2.0 - a * (1.0 + a);
  const double plus = (t + base) / (2.0 * root6);
  const double minus = (-t + base) / (2.0 * root6);
  std::array<double, 6> values = {(s + r) / root6, (s - r) / root6, plus, plus, minus, minus};
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace butson
