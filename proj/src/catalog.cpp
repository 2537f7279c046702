#include "butson/catalog.hpp"

#include <algorithm>
#include <functional>

#include "butson/errors.hpp"

namespace butson {

namespace {

// H(3,6) template over the letters x, y, z.
constexpr std::array<std::string_view, 6> kTemplate = {
    "zxyyxz",
    "xzyxyz",
    "xxxxxx",
    "zxzxyy",
    "xzzyxy",
    "zzxyyx",
};

// Exponent patterns of w. Row/column 0 are all ones in every normalized form.
const Grid kA1 = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 1, 2, 2, 1},
    {0, 1, 0, 1, 2, 2},
    {0, 2, 1, 0, 1, 2},
    {0, 2, 2, 1, 0, 1},
    {0, 1, 2, 2, 1, 0},
};

const Grid kA2Printed = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 2, 1, 2, 1},
    {0, 2, 0, 1, 1, 2},
    {0, 1, 1, 0, 2, 2},
    {0, 2, 1, 1, 0, 2},
    {0, 2, 1, 2, 1, 0},
};

// Printed rows 5 and 6 with the w <-> w^2 swaps at (4,3), (4,5), (5,1), (5,2).
const Grid kA2 = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 2, 1, 2, 1},
    {0, 2, 0, 1, 1, 2},
    {0, 1, 1, 0, 2, 2},
    {0, 2, 1, 2, 0, 1},
    {0, 1, 2, 2, 1, 0},
};

const Grid kA3 = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 1, 2, 1, 2},
    {0, 1, 0, 2, 2, 1},
    {0, 2, 2, 0, 1, 1},
    {0, 1, 2, 1, 0, 2},
    {0, 2, 1, 1, 2, 0},
};

const Grid kA10 = {
    {2, 0, 1, 1, 0, 2},
    {0, 2, 1, 0, 1, 2},
    {0, 0, 0, 0, 0, 0},
    {2, 0, 2, 0, 1, 1},
    {0, 2, 2, 1, 0, 1},
    {2, 2, 0, 1, 1, 0},
};

const Grid kA20 = {
    {2, 1, 0, 0, 1, 2},
    {1, 2, 0, 1, 0, 2},
    {1, 1, 1, 1, 1, 1},
    {2, 1, 2, 1, 0, 0},
    {1, 2, 2, 0, 1, 0},
    {2, 2, 1, 0, 0, 1},
};

const Grid kA30 = {
    {0, 1, 2, 2, 1, 0},
    {1, 0, 2, 1, 2, 0},
    {1, 1, 1, 1, 1, 1},
    {0, 1, 0, 1, 2, 2},
    {1, 0, 0, 2, 1, 2},
    {0, 0, 1, 2, 2, 1},
};

const Grid kA40Printed = {
    {0, 2, 1, 1, 2, 0},
    {2, 0, 1, 2, 1, 0},
    {2, 2, 2, 2, 2, 2},
    {0, 2, 0, 2, 1, 1},
    {2, 0, 0, 1, 2, 1},
    {0, 0, 2, 2, 1, 2},
};

// Printed grid with (5,3) set to y = w as the template requires.
const Grid kA40 = {
    {0, 2, 1, 1, 2, 0},
    {2, 0, 1, 2, 1, 0},
    {2, 2, 2, 2, 2, 2},
    {0, 2, 0, 2, 1, 1},
    {2, 0, 0, 1, 2, 1},
    {0, 0, 2, 1, 1, 2},
};

const Grid kA50 = {
    {1, 2, 0, 0, 2, 1},
    {2, 1, 0, 2, 0, 1},
    {2, 2, 2, 2, 2, 2},
    {1, 2, 1, 2, 0, 0},
    {2, 1, 1, 0, 2, 0},
    {1, 1, 2, 0, 0, 2},
};

const Grid kA60 = {
    {1, 0, 2, 2, 0, 1},
    {0, 1, 2, 0, 2, 1},
    {0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 2, 2},
    {0, 1, 1, 2, 0, 2},
    {1, 1, 0, 2, 2, 0},
};

const Grid kA01 = {
    {0, 0, 0, 0, 0, 0},
    {0, 1, 2, 1, 0, 2},
    {0, 2, 1, 1, 2, 0},
    {0, 0, 1, 2, 1, 2},
    {0, 1, 0, 2, 2, 1},
    {0, 2, 2, 0, 1, 1},
};

const Grid kA02 = {
    {0, 0, 0, 0, 0, 0},
    {0, 2, 1, 2, 0, 1},
    {0, 1, 2, 2, 1, 0},
    {0, 0, 2, 1, 2, 1},
    {0, 2, 0, 1, 1, 2},
    {0, 1, 1, 0, 2, 2},
};

// Printed identically to A01.
const Grid kA03 = kA01;

// q = 4: 1 -> 0, i -> 1, -1 -> 2, -i -> 3.
const Grid kM6 = {
    {0, 0, 0, 0, 0, 0},
    {0, 2, 1, 1, 3, 3},
    {0, 3, 2, 0, 2, 1},
    {0, 3, 0, 2, 1, 2},
    {0, 1, 2, 3, 0, 2},
    {0, 1, 3, 2, 2, 0},
};

const Grid kM61 = {
    {0, 0, 0, 0, 0, 0},
    {0, 2, 0, 2, 1, 3},
    {0, 0, 2, 1, 2, 3},
    {0, 3, 2, 2, 0, 1},
    {0, 2, 3, 0, 2, 1},
    {0, 1, 1, 3, 3, 2},
};

Grid fourier_grid(int n) {
  Grid g(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i * j) % n;
  return g;
}

std::vector<CatalogEntry> build_catalog() {
  auto entry = [](std::string name, int q, const Grid& g, std::string description) {
    return CatalogEntry{std::move(name), ButsonMatrix::from_exponents(q, g), std::move(description)};
  };
  return {
      entry("A1", 3, kA1, "Agaian matrix, symmetric form with unit diagonal"),
      entry("A2", 3, kA2, "second symmetric form (printed grid with four w/w^2 swaps repaired)"),
      entry("A3", 3, kA3, "third symmetric form"),
      entry("A10", 3, kA10, "H(3,6) with x=1, y=w, z=w^2"),
      entry("A20", 3, kA20, "H(3,6) with x=w, y=1, z=w^2"),
      entry("A30", 3, kA30, "H(3,6) with x=w, y=w^2, z=1"),
      entry("A40", 3, kA40, "H(3,6) with x=w^2, y=w, z=1 (printed grid with one entry repaired)"),
      entry("A50", 3, kA50, "H(3,6) with x=w^2, y=1, z=w"),
      entry("A60", 3, kA60, "H(3,6) with x=1, y=w^2, z=w"),
      entry("A01", 3, kA01, "standard form of A10"),
      entry("A02", 3, kA02, "standard form of A20"),
      entry("A03", 3, kA03, "standard form listed for A30 (printed identical to A01)"),
      entry("M6", 4, kM6, "self-adjoint complex Hadamard matrix"),
      entry("M61", 4, kM61, "row/column rearrangement of M6, not self-adjoint"),
      entry("F6", 6, fourier_grid(6), "Fourier matrix of order 6 (comparison control)"),
      entry("A2_printed", 3, kA2Printed, "second symmetric form exactly as printed (not Hadamard)"),
      entry("A40_printed", 3, kA40Printed, "H(3,6) with x=w^2, y=w, z=1 exactly as printed (not Hadamard)"),
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool has(std::string_view name) {
  const auto& entries = catalog();
  return std::any_of(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
}

const ButsonMatrix& get(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.matrix;
  throw UnknownMatrix("unknown catalog matrix '" + std::string(name) + "'");
}

std::array<int, 3> assignment_exponents(const XyzAssignment& sigma) {
  auto exponent_of = [](const CycInt& v) {
    if (v.order() != 3) throw InvalidAssignment("assignment values must lie in Z[w]");
    for (int k = 0; k < 3; ++k)
      if (v == CycInt::root(3, k)) return k;
    throw InvalidAssignment("assignment value " + v.str() + " is not a cube root of unity");
  };
  std::array<int, 3> e = {exponent_of(sigma.x), exponent_of(sigma.y), exponent_of(sigma.z)};
  if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]) throw InvalidAssignment("x, y, z must be distinct");
  return e;
}

XyzAssignment assignment_from_exponents(int x, int y, int z) {
  return XyzAssignment{CycInt::root(3, x), CycInt::root(3, y), CycInt::root(3, z)};
}

ButsonMatrix agaian_variant(const XyzAssignment& sigma) {
  const auto e = assignment_exponents(sigma);
  Grid g(6, std::vector<std::int64_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) g[i][j] = e[static_cast<std::size_t>(kTemplate[i][j] - 'x')];
  return ButsonMatrix::from_exponents(3, g);
}

const std::vector<NamedVariant>& agaian_variants() {
  static const std::vector<NamedVariant> variants = {
      {"A10", assignment_from_exponents(0, 1, 2)}, {"A20", assignment_from_exponents(1, 0, 2)},
      {"A30", assignment_from_exponents(1, 2, 0)}, {"A40", assignment_from_exponents(2, 1, 0)},
      {"A50", assignment_from_exponents(2, 0, 1)}, {"A60", assignment_from_exponents(0, 2, 1)},
  };
  return variants;
}

ComplexMatrix agaian_symmetric(double a) {
  const ButsonMatrix& pattern = get("A2");
  const double values[3] = {1.0, a, a * a};
  ComplexMatrix m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = values[pattern(i, j)];
  return m;
}

std::vector<std::vector<EntryEdit>> minimal_hadamard_repairs(const ButsonMatrix& b, int max_changes) {
  const int n = b.size();
  const int q = b.order();
  // A dephased input keeps its normalized first row and column fixed.
  bool dephased = true;
  for (int k = 0; k < n; ++k) dephased = dephased && b(0, k) == 0 && b(k, 0) == 0;
  const int first = dephased ? 1 : 0;
  std::vector<std::pair<int, int>> cells;
  for (int i = first; i < n; ++i)
    for (int j = first; j < n; ++j) cells.emplace_back(i, j);

  Grid grid = b.grid();
  std::vector<EntryEdit> current;
  std::vector<std::vector<EntryEdit>> found;

  std::function<void(std::size_t, int)> search = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      if (is_hadamard_exact(ButsonMatrix::from_exponents(q, grid))) found.push_back(current);
      return;
    }
    for (std::size_t c = start; c < cells.size(); ++c) {
      const auto [i, j] = cells[c];
      auto& slot = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto original = slot;
      for (int shift = 1; shift < q; ++shift) {
        slot = (original + shift) % q;
        current.push_back(EntryEdit{i, j, static_cast<int>(slot)});
        search(c + 1, remaining - 1);
        current.pop_back();
      }
      slot = original;
    }
  };

  for (int k = 0; k <= max_changes; ++k) {
    search(0, k);
    if (!found.empty()) break;
  }
  return found;
}

}  // namespace butson
