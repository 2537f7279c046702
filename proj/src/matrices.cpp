#include "butson/matrices.hpp"

#include <cmath>

#include "butson/errors.hpp"

namespace butson {

namespace {

int mod(std::int64_t v, int q) {
  const auto r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

void require_phase_length(const PhaseVector& p, int q, int n) {
  if (p.q != q || static_cast<int>(p.exps.size()) != n) throw ShapeError("phase vector does not match matrix");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw ShapeError("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<std::complex<double>>>& rows) {
  const int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw ShapeError("matrix grid is not square");
    for (int j = 0; j < n; ++j) {
      const auto v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::invalid_argument("matrix entries must be finite");
      m(i, j) = v;
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (other.n_ != n_) throw ShapeError("matrix product dimension mismatch");
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const auto a = (*this)(i, k);
      for (int j = 0; j < n_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

bool ComplexMatrix::is_real() const {
  for (const auto& v : data_)
    if (v.imag() != 0.0) return false;
  return true;
}

bool ComplexMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

CycMatrix::CycMatrix(int q, int n) : q_(q), n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), CycInt(q)) {
  if (n < 1) throw ShapeError("matrix dimension must be positive");
}

CycMatrix CycMatrix::identity(int q, int n) {
  CycMatrix m(q, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycInt::integer(q, 1);
  return m;
}

ComplexMatrix CycMatrix::embed() const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).embed();
  return m;
}

PhaseVector PhaseVector::zeros(int q, int n) { return PhaseVector{q, std::vector<int>(static_cast<std::size_t>(n), 0)}; }

ButsonMatrix ButsonMatrix::from_exponents(int q, const Grid& grid) {
  if (q < 1) throw std::invalid_argument("root order must be positive");
  const int n = static_cast<int>(grid.size());
  if (n < 1) throw ShapeError("matrix grid is empty");
  ButsonMatrix b;
  b.q_ = q;
  b.n_ = n;
  b.exps_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != n) throw ShapeError("matrix grid is not square");
    for (auto e : row) b.exps_.push_back(mod(e, q));
  }
  return b;
}

Grid ButsonMatrix::grid() const {
  Grid g(static_cast<std::size_t>(n_), std::vector<std::int64_t>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  return g;
}

CycMatrix ButsonMatrix::to_cyc() const {
  CycMatrix m(q_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = entry(i, j);
  return m;
}

ComplexMatrix ButsonMatrix::embed() const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = entry(i, j).embed();
  return m;
}

ButsonMatrix ButsonMatrix::lift(int m) const {
  if (m < 1 || m % q_ != 0) throw OrderMismatch("cannot lift order " + std::to_string(q_) + " into " + std::to_string(m));
  ButsonMatrix r = *this;
  r.q_ = m;
  for (auto& e : r.exps_) e *= m / q_;
  return r;
}

ButsonMatrix ButsonMatrix::conj() const {
  ButsonMatrix r = *this;
  for (auto& e : r.exps_) e = mod(-e, q_);
  return r;
}

ButsonMatrix ButsonMatrix::transpose() const {
  ButsonMatrix r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.exps_[index(i, j)] = (*this)(j, i);
  return r;
}

ButsonMatrix ButsonMatrix::permuted(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (static_cast<int>(rows.size()) != n_ || static_cast<int>(cols.size()) != n_) throw ShapeError("permutation length mismatch");
  ButsonMatrix r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.exps_[index(i, j)] = (*this)(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
  return r;
}

ButsonMatrix ButsonMatrix::scaled(const PhaseVector& left, const PhaseVector& right) const {
  require_phase_length(left, q_, n_);
  require_phase_length(right, q_, n_);
  ButsonMatrix r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      r.exps_[index(i, j)] = mod(static_cast<std::int64_t>(left.exps[static_cast<std::size_t>(i)]) + (*this)(i, j) +
                                     right.exps[static_cast<std::size_t>(j)],
                                 q_);
    }
  return r;
}

std::pair<ButsonMatrix, ButsonMatrix> to_common_order(const ButsonMatrix& a, const ButsonMatrix& b) {
  const int m = common_order(a.order(), b.order());
  return {a.lift(m), b.lift(m)};
}

bool is_hadamard_exact(const ButsonMatrix& b) {
  const int n = b.size();
  const int q = b.order();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int k = 0; k < n; ++k) ++counts[static_cast<std::size_t>(mod(b(i, k) - b(j, k), q))];
      if (!CycInt::from_exponent_counts(q, counts).is_zero()) return false;
    }
  }
  return true;
}

bool is_hadamard_numeric(const ComplexMatrix& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(std::abs(m(i, j)) - 1.0) > tol) return false;
  const ComplexMatrix gram = m * m.adjoint();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::complex<double> expected = i == j ? static_cast<double>(n) : 0.0;
      if (std::abs(gram(i, j) - expected) > tol) return false;
    }
  return true;
}

Dephased dephase(const ButsonMatrix& b) {
  const int n = b.size();
  const int q = b.order();
  PhaseVector left = PhaseVector::zeros(q, n);
  PhaseVector right = PhaseVector::zeros(q, n);
  for (int i = 0; i < n; ++i) left.exps[static_cast<std::size_t>(i)] = b(i, 0);
  for (int j = 0; j < n; ++j) right.exps[static_cast<std::size_t>(j)] = mod(b(0, j) - b(0, 0), q);

  PhaseVector neg_left = left;
  PhaseVector neg_right = right;
  for (auto& e : neg_left.exps) e = mod(-e, q);
  for (auto& e : neg_right.exps) e = mod(-e, q);
  return Dephased{b.scaled(neg_left, neg_right), std::move(left), std::move(right)};
}

}  // namespace butson
