#include <set>

#include "butson/catalog.hpp"
#include "butson/errors.hpp"
#include "doctest.h"

using butson::ButsonMatrix;

namespace {

int hamming(const ButsonMatrix& a, const ButsonMatrix& b) {
  int d = 0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) d += a(i, j) != b(i, j);
  return d;
}

bool is_symmetric(const ButsonMatrix& b) { return b.transpose() == b; }

}  // namespace

TEST_CASE("catalog names and shapes") {
  const std::vector<std::string> names = {"A1",  "A2",  "A3",  "A10", "A20", "A30", "A40", "A50", "A60",
                                          "A01", "A02", "A03", "M6",  "M61", "F6",  "A2_printed", "A40_printed"};
  REQUIRE(butson::catalog().size() == names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto& e = butson::catalog()[k];
    CHECK(e.name == names[k]);
    CHECK(e.matrix.size() == 6);
    CHECK_FALSE(e.description.empty());
    CHECK(butson::has(e.name));
  }
  CHECK(butson::get("M6").order() == 4);
  CHECK(butson::get("F6").order() == 6);
  CHECK(butson::get("A1").order() == 3);
  CHECK_FALSE(butson::has("A7"));
  CHECK_THROWS_AS(butson::get("A7"), butson::UnknownMatrix);
}

TEST_CASE("every catalog matrix except the printed originals is Hadamard") {
  for (const auto& e : butson::catalog()) {
    CAPTURE(e.name);
    const bool printed = e.name.ends_with("_printed");
    CHECK(butson::is_hadamard_exact(e.matrix) == !printed);
  }
}

TEST_CASE("symmetric forms have unit diagonal") {
  for (const char* name : {"A1", "A2", "A3"}) {
    CAPTURE(name);
    const auto& b = butson::get(name);
    CHECK(is_symmetric(b));
    for (int i = 0; i < 6; ++i) CHECK(b(i, i) == 0);
  }
  CHECK_FALSE(is_symmetric(butson::get("A2_printed")));
}

TEST_CASE("M6 is self-adjoint and M61 is not") {
  const auto& m6 = butson::get("M6");
  CHECK(m6.conj().transpose() == m6);
  const auto& m61 = butson::get("M61");
  CHECK_FALSE(m61.conj().transpose() == m61);
}

TEST_CASE("substitutions reproduce the named variants") {
  for (const auto& v : butson::agaian_variants()) {
    CAPTURE(v.name);
    CHECK(butson::agaian_variant(v.assignment) == butson::get(v.name));
  }
  std::set<butson::Grid> distinct;
  for (const auto& v : butson::agaian_variants()) distinct.insert(butson::get(v.name).grid());
  CHECK(distinct.size() == 6);
}

TEST_CASE("assignment validation") {
  CHECK(butson::assignment_exponents(butson::assignment_from_exponents(2, 0, 1)) == std::array{2, 0, 1});
  CHECK_THROWS_AS(butson::agaian_variant(butson::assignment_from_exponents(0, 0, 1)), butson::InvalidAssignment);
  const butson::XyzAssignment wrong_ring{butson::CycInt::root(6, 1), butson::CycInt::root(3, 1), butson::CycInt::root(3, 2)};
  CHECK_THROWS_AS(butson::assignment_exponents(wrong_ring), butson::InvalidAssignment);
  const butson::XyzAssignment not_root{butson::CycInt::integer(3, 2), butson::CycInt::root(3, 1), butson::CycInt::root(3, 2)};
  CHECK_THROWS_AS(butson::assignment_exponents(not_root), butson::InvalidAssignment);
}

TEST_CASE("printed grids and their repairs") {
  CHECK(hamming(butson::get("A2"), butson::get("A2_printed")) == 4);
  CHECK(hamming(butson::get("A40"), butson::get("A40_printed")) == 1);

  const auto a40 = butson::minimal_hadamard_repairs(butson::get("A40_printed"), 1);
  REQUIRE(a40.size() == 1);
  REQUIRE(a40[0].size() == 1);
  CHECK(a40[0][0].row == 5);
  CHECK(a40[0][0].col == 3);
  CHECK(a40[0][0].exponent == 1);

  const auto a2 = butson::minimal_hadamard_repairs(butson::get("A2_printed"), 4);
  REQUIRE(a2.size() == 1);
  auto g = butson::get("A2_printed").grid();
  for (const auto& edit : a2[0]) g[static_cast<std::size_t>(edit.row)][static_cast<std::size_t>(edit.col)] = edit.exponent;
  CHECK(ButsonMatrix::from_exponents(3, g) == butson::get("A2"));

  const auto none = butson::minimal_hadamard_repairs(butson::get("A1"), 2);
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
}

TEST_CASE("real symmetric family") {
  const auto m = butson::agaian_symmetric(0.5);
  CHECK(m.is_real());
  CHECK(m.is_symmetric());
  for (int i = 0; i < 6; ++i) CHECK(m(i, i) == 1.0);
  const auto ones = butson::agaian_symmetric(1.0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(ones(i, j) == 1.0);
}
