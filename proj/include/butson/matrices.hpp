#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "butson/cyclo.hpp"

namespace butson {

using Grid = std::vector<std::vector<std::int64_t>>;

/// Dense n x n matrix of complex doubles, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n);
  static ComplexMatrix from_rows(const std::vector<std::vector<std::complex<double>>>& rows);

  int size() const { return n_; }
  std::complex<double>& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::complex<double>& operator()(int i, int j) const { return data_[index(i, j)]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  bool is_real() const;
  bool is_symmetric() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

  int n_ = 0;
  std::vector<std::complex<double>> data_;
};

/// Dense n x n matrix over Z[zeta_q].
class CycMatrix {
 public:
  CycMatrix(int q, int n);
  static CycMatrix identity(int q, int n);

  int order() const { return q_; }
  int size() const { return n_; }
  CycInt& operator()(int i, int j) { return data_[index(i, j)]; }
  const CycInt& operator()(int i, int j) const { return data_[index(i, j)]; }

  ComplexMatrix embed() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

  int q_;
  int n_;
  std::vector<CycInt> data_;
};

/// Diagonal phase matrix diag(zeta_q^exps[i]).
struct PhaseVector {
  int q = 1;
  std::vector<int> exps;

  static PhaseVector zeros(int q, int n);
  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
};

/// Square matrix whose entries are q-th roots of unity, stored as exponents
/// reduced into [0, q).
class ButsonMatrix {
 public:
  ButsonMatrix() = default;
  /// Reduces every exponent mod q. Throws ShapeError on a non-square or empty grid.
  static ButsonMatrix from_exponents(int q, const Grid& grid);

  int order() const { return q_; }
  int size() const { return n_; }
  int operator()(int i, int j) const { return exps_[index(i, j)]; }
  Grid grid() const;

  CycInt entry(int i, int j) const { return CycInt::root(q_, (*this)(i, j)); }
  CycMatrix to_cyc() const;
  ComplexMatrix embed() const;

  /// Same matrix with exponents over the order m (a multiple of q).
  ButsonMatrix lift(int m) const;
  /// Entrywise conjugate, i.e. zeta -> zeta^(q-1).
  ButsonMatrix conj() const;
  ButsonMatrix transpose() const;
  /// result(i, j) = this(rows[i], cols[j]).
  ButsonMatrix permuted(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// result(i, j) = left_i + this(i, j) + right_j mod q.
  ButsonMatrix scaled(const PhaseVector& left, const PhaseVector& right) const;

  friend bool operator==(const ButsonMatrix&, const ButsonMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

  int q_ = 1;
  int n_ = 0;
  std::vector<int> exps_;
};

/// Both matrices over the least common order.
std::pair<ButsonMatrix, ButsonMatrix> to_common_order(const ButsonMatrix& a, const ButsonMatrix& b);

/// Exact test: every pair of distinct rows is orthogonal in Z[zeta_q].
bool is_hadamard_exact(const ButsonMatrix& b);

/// Unimodular entries and M M* = n I, both within tol.
bool is_hadamard_numeric(const ComplexMatrix& m, double tol);

struct Dephased {
  ButsonMatrix matrix;
  PhaseVector left;
  PhaseVector right;
};

/// Standard form with first row and column equal to 1.
///
/// Rows are normalized by their first-column entry, then columns by the
/// first-row entry of the result. `input == matrix.scaled(left, right)`.
Dephased dephase(const ButsonMatrix& b);

}  // namespace butson
