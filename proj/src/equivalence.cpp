#include "butson/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "butson/errors.hpp"
#include "butson/fingerprint.hpp"
#include "butson/polynomial.hpp"

namespace butson {

namespace {

int mod(int v, int q) { return ((v % q) + q) % q; }

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

void require_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) throw ShapeError("witness permutation has wrong length");
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("witness permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Lexicographically smallest column order tau with tau[0] = anchor that
// makes the row-permuted matrix dephase to `target`, if one exists.
std::optional<std::vector<int>> match_columns(const ButsonMatrix& rows_permuted, const ButsonMatrix& target, int anchor) {
  const int n = target.size();
  const int q = target.order();
  // normalized(i, j): entry after dividing row i by column `anchor`, then column j by row 0.
  auto normalized = [&](int i, int j) {
    const int left = rows_permuted(i, j) - rows_permuted(i, anchor);
    const int top = rows_permuted(0, j) - rows_permuted(0, anchor);
    return mod(left - top, q);
  };

  std::vector<int> tau(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  tau[0] = anchor;
  used[static_cast<std::size_t>(anchor)] = 1;
  for (int j = 1; j < n; ++j) {
    int chosen = -1;
    for (int u = 0; u < n && chosen < 0; ++u) {
      if (used[static_cast<std::size_t>(u)]) continue;
      bool equal = true;
      for (int i = 0; i < n && equal; ++i) equal = normalized(i, u) == target(i, j);
      if (equal) chosen = u;
    }
    if (chosen < 0) return std::nullopt;
    tau[static_cast<std::size_t>(j)] = chosen;
    used[static_cast<std::size_t>(chosen)] = 1;
  }
  return tau;
}

PhaseVector difference(const PhaseVector& a, const PhaseVector& b) {
  PhaseVector r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = mod(a.exps[i] - b.exps[i], a.q);
  return r;
}

}  // namespace

Witness Witness::identity(int q, int n) {
  Witness w{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n)), PhaseVector::zeros(q, n),
            PhaseVector::zeros(q, n)};
  std::iota(w.row_perm.begin(), w.row_perm.end(), 0);
  std::iota(w.col_perm.begin(), w.col_perm.end(), 0);
  return w;
}

ButsonMatrix apply_witness(const Witness& w, const ButsonMatrix& b) {
  require_permutation(w.row_perm, b.size());
  require_permutation(w.col_perm, b.size());
  const int m = common_order(b.order(), w.left.q);
  if (w.left.q != w.right.q || m != w.left.q) throw OrderMismatch("witness phases do not cover the matrix order");
  return b.lift(m).permuted(w.row_perm, w.col_perm).scaled(w.left, w.right);
}

Witness invert(const Witness& w) {
  Witness r;
  r.row_perm = inverse_permutation(w.row_perm);
  r.col_perm = inverse_permutation(w.col_perm);
  r.left = PhaseVector::zeros(w.left.q, static_cast<int>(w.left.exps.size()));
  r.right = PhaseVector::zeros(w.right.q, static_cast<int>(w.right.exps.size()));
  for (std::size_t a = 0; a < r.row_perm.size(); ++a)
    r.left.exps[a] = mod(-w.left.exps[static_cast<std::size_t>(r.row_perm[a])], w.left.q);
  for (std::size_t b = 0; b < r.col_perm.size(); ++b)
    r.right.exps[b] = mod(-w.right.exps[static_cast<std::size_t>(r.col_perm[b])], w.right.q);
  return r;
}

Witness compose(const Witness& outer, const Witness& inner) {
  if (outer.left.q != inner.left.q || outer.row_perm.size() != inner.row_perm.size()) {
    throw ShapeError("witnesses act on different shapes or orders");
  }
  const int q = outer.left.q;
  Witness r = outer;
  for (std::size_t i = 0; i < r.row_perm.size(); ++i) {
    const auto s = static_cast<std::size_t>(outer.row_perm[i]);
    r.row_perm[i] = inner.row_perm[s];
    r.left.exps[i] = mod(outer.left.exps[i] + inner.left.exps[s], q);
  }
  for (std::size_t j = 0; j < r.col_perm.size(); ++j) {
    const auto t = static_cast<std::size_t>(outer.col_perm[j]);
    r.col_perm[j] = inner.col_perm[t];
    r.right.exps[j] = mod(outer.right.exps[j] + inner.right.exps[t], q);
  }
  return r;
}

EquivVerdict standard_equivalent(const ButsonMatrix& first, const ButsonMatrix& second) {
  if (first.size() != second.size()) throw ShapeError("matrices differ in dimension");
  const auto [a, b] = to_common_order(first, second);
  const int n = a.size();

  EquivVerdict verdict;
  verdict.order = a.order();
  if (haagerup_set(a) != haagerup_set(b)) {
    verdict.stats.refuted_by_fingerprint = true;
    return verdict;
  }

  const Dephased target = dephase(a);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> identity_cols = sigma;
  do {
    ++verdict.stats.row_permutations;
    const ButsonMatrix rows_permuted = b.permuted(sigma, identity_cols);
    for (int anchor = 0; anchor < n; ++anchor) {
      ++verdict.stats.column_anchors;
      auto tau = match_columns(rows_permuted, target.matrix, anchor);
      if (!tau) continue;

      const Dephased candidate = dephase(b.permuted(sigma, *tau));
      Witness w{sigma, *tau, difference(target.left, candidate.left), difference(target.right, candidate.right)};
      if (apply_witness(w, b) != a) throw std::logic_error("standard equivalence witness failed verification");
      verdict.equivalent = true;
      verdict.witness = std::move(w);
      return verdict;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return verdict;
}

bool unitary_equivalent(const ButsonMatrix& first, const ButsonMatrix& second) {
  if (first.size() != second.size()) throw ShapeError("matrices differ in dimension");
  const int n = first.size();
  return poly_eq(scale(charpoly_exact(first), n), scale(charpoly_exact(second), n));
}

std::vector<std::vector<std::size_t>> classify(const std::vector<ButsonMatrix>& matrices, Relation relation) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      const ButsonMatrix& rep = matrices[cls.front()];
      const bool same = relation == Relation::standard ? standard_equivalent(rep, matrices[i]).equivalent
                                                       : unitary_equivalent(rep, matrices[i]);
      if (same) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

}  // namespace butson
