#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "butson/cyclo.hpp"
#include "butson/matrices.hpp"

namespace butson {

struct CatalogEntry {
  std::string name;
  ButsonMatrix matrix;
  std::string description;
};

/// Every named matrix, in a fixed order:
/// A1, A2, A3, A10..A60, A01, A02, A03, M6, M61, F6, A2_printed, A40_printed.
///
/// Two printed grids are not Hadamard. A2 is the unique Hadamard matrix
/// within Hamming distance 4 of A2_printed, and A40 differs from
/// A40_printed in the single entry that breaks the H(3,6) substitution.
/// The printed grids are kept verbatim for audit.
const std::vector<CatalogEntry>& catalog();

/// Throws UnknownMatrix for names not in the catalog.
const ButsonMatrix& get(std::string_view name);
bool has(std::string_view name);

/// One substitution of {1, w, w^2} into the H(3,6) template.
struct XyzAssignment {
  CycInt x;
  CycInt y;
  CycInt z;
};

/// Exponents (of w) of x, y, z; throws InvalidAssignment unless the three
/// values are distinct cube roots of unity.
std::array<int, 3> assignment_exponents(const XyzAssignment& sigma);

XyzAssignment assignment_from_exponents(int x, int y, int z);

ButsonMatrix agaian_variant(const XyzAssignment& sigma);

struct NamedVariant {
  std::string name;
  XyzAssignment assignment;
};

/// The six substitutions named A10, A20, A30, A40, A50, A60.
const std::vector<NamedVariant>& agaian_variants();

/// Real symmetric matrix obtained from A2 by replacing w with a real a.
ComplexMatrix agaian_symmetric(double a);

/// A single entry change: position and the exponent it takes.
struct EntryEdit {
  int row;
  int col;
  int exponent;
};

/// All Hadamard matrices reachable by changing the fewest entries of `b`,
/// searching up to `max_changes` edits. When `b` is dephased its first row
/// and column are left untouched.
/// Returns the edit lists of the smallest size that has any solution.
std::vector<std::vector<EntryEdit>> minimal_hadamard_repairs(const ButsonMatrix& b, int max_changes);

}  // namespace butson
