#pragma once

#include <cstdint>
#include <vector>

#include "butson/matrices.hpp"

namespace butson {

/// Multiset of e_ij + e_kl - e_il - e_kj mod q over all index quadruples,
/// stored as counts per exponent.
struct HaagerupSet {
  int q = 1;
  std::vector<std::int64_t> counts;

  friend bool operator==(const HaagerupSet&, const HaagerupSet&) = default;
};

HaagerupSet haagerup_set(const ButsonMatrix& b);

/// Compares the two sets after lifting both matrices to a common order.
bool same_haagerup_set(const ButsonMatrix& a, const ButsonMatrix& b);

struct DefectAnalysis {
  int defect = 0;
  int rank = 0;
  /// Singular values of the linearized system, descending.
  std::vector<double> singular_values;
};

/// Dimension of first-order Hadamard-preserving phase deformations, less
/// the 2n - 1 trivial diagonal directions.
///
/// Builds the n(n-1) x n^2 real system sum_k H_ik conj(H_jk) (R_ik - R_jk) = 0
/// over row pairs i < j. Singular values below tol * sigma_max count as zero;
/// any in [tol, 10 tol) * sigma_max raise IndeterminateRank. Non-Hadamard
/// input raises NotHadamard.
DefectAnalysis defect_analysis(const ButsonMatrix& b, double tol = 1e-8);
int defect(const ButsonMatrix& b, double tol = 1e-8);

}  // namespace butson
