#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "butson/matrices.hpp"

namespace butson {

/// (D1, P1, P2, D2) with D1 P1 H P2 D2 encoded as
/// result(i, j) = left_i + H(row_perm[i], col_perm[j]) + right_j mod q.
struct Witness {
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  PhaseVector left;
  PhaseVector right;

  static Witness identity(int q, int n);
  friend bool operator==(const Witness&, const Witness&) = default;
};

ButsonMatrix apply_witness(const Witness& w, const ButsonMatrix& b);

/// Witness that undoes w: apply_witness(invert(w), apply_witness(w, b)) == b.
Witness invert(const Witness& w);

/// Witness equivalent to applying `inner` first and `outer` second.
Witness compose(const Witness& outer, const Witness& inner);

struct SearchStats {
  /// Row permutations of the second matrix visited.
  std::uint64_t row_permutations = 0;
  /// (row permutation, leading column) pairs whose column multisets were compared.
  std::uint64_t column_anchors = 0;
  /// The Haagerup sets differed, so no search was run.
  bool refuted_by_fingerprint = false;
};

struct EquivVerdict {
  bool equivalent = false;
  /// Maps the second matrix onto the first; present iff equivalent.
  std::optional<Witness> witness;
  /// Common root order the witness phases are expressed in.
  int order = 1;
  SearchStats stats;
};

/// Exact decision of H1 = D1 P1 H2 P2 D2 over q-th root phases, q the least
/// common order of the inputs. Returns the lexicographically smallest
/// (row_perm, col_perm) witness. Throws ShapeError on dimension mismatch.
EquivVerdict standard_equivalent(const ButsonMatrix& first, const ButsonMatrix& second);

/// Equality of the scaled exact characteristic polynomials.
bool unitary_equivalent(const ButsonMatrix& first, const ButsonMatrix& second);

enum class Relation { standard, unitary };

/// Partition by pairwise decision; each class lists input indices ascending
/// and classes are ordered by their first member.
std::vector<std::vector<std::size_t>> classify(const std::vector<ButsonMatrix>& matrices, Relation relation);

}  // namespace butson
