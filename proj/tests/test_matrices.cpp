#include <random>

#include "butson/catalog.hpp"
#include "butson/errors.hpp"
#include "butson/matrices.hpp"
#include "doctest.h"
#include "oracles.hpp"

using butson::ButsonMatrix;

namespace {

bool oracle_hadamard(const ButsonMatrix& b) {
  const oracle::Mat h = oracle::dense(b);
  const oracle::Mat g = h * h.adjoint();
  const oracle::Mat target = oracle::Mat::Identity(b.size(), b.size()) * static_cast<double>(b.size());
  return (g - target).norm() < 1e-9;
}

void check_round_trip(const ButsonMatrix& b) {
  const auto d = butson::dephase(b);
  const int n = b.size();
  for (int k = 0; k < n; ++k) {
    CHECK(d.matrix(0, k) == 0);
    CHECK(d.matrix(k, 0) == 0);
  }
  CHECK(d.matrix.scaled(d.left, d.right) == b);
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(ButsonMatrix::from_exponents(3, {}), butson::ShapeError);
  CHECK_THROWS_AS(ButsonMatrix::from_exponents(3, {{0, 1}, {0}}), butson::ShapeError);
  const auto b = ButsonMatrix::from_exponents(3, {{4, -1}, {3, 2}});
  CHECK(b(0, 0) == 1);
  CHECK(b(0, 1) == 2);
  CHECK(b(1, 0) == 0);
}

TEST_CASE("exact Hadamard test agrees with a dense oracle") {
  for (const auto& e : butson::catalog()) CHECK_MESSAGE(butson::is_hadamard_exact(e.matrix) == oracle_hadamard(e.matrix), e.name);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int q = 2 + t % 5;
    const int n = 2 + t % 4;
    const auto b = ButsonMatrix::from_exponents(q, oracle::random_grid(rng, q, n));
    CHECK(butson::is_hadamard_exact(b) == oracle_hadamard(b));
  }
}

TEST_CASE("all-ones matrix is not Hadamard") {
  const butson::Grid ones(6, std::vector<std::int64_t>(6, 0));
  const auto b = ButsonMatrix::from_exponents(3, ones);
  CHECK_FALSE(butson::is_hadamard_exact(b));
  CHECK_FALSE(butson::is_hadamard_numeric(b.embed(), 1e-10));
}

TEST_CASE("numeric Hadamard test") {
  CHECK(butson::is_hadamard_numeric(butson::get("F6").embed(), 1e-10));
  auto m = butson::get("A1").embed();
  m(2, 3) *= std::complex<double>(1.0, 1e-6);
  CHECK_FALSE(butson::is_hadamard_numeric(m, 1e-10));
  CHECK(butson::is_hadamard_numeric(m, 1e-3));
}

TEST_CASE("permutation and scaling conventions") {
  const auto b = ButsonMatrix::from_exponents(4, {{0, 1, 2}, {3, 0, 1}, {2, 3, 0}});
  const auto p = b.permuted({2, 0, 1}, {1, 2, 0});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p(i, j) == b(std::array{2, 0, 1}[i], std::array{1, 2, 0}[j]));
  const butson::PhaseVector left{4, {1, 0, 3}};
  const butson::PhaseVector right{4, {0, 2, 0}};
  const auto s = b.scaled(left, right);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s(i, j) == (b(i, j) + left.exps[i] + right.exps[j]) % 4);
  CHECK_THROWS_AS(b.scaled(butson::PhaseVector{3, {0, 0, 0}}, right), butson::ShapeError);
}

TEST_CASE("conjugate, transpose and lift") {
  const auto& a = butson::get("A10");
  CHECK(a.conj().conj() == a);
  CHECK(a.transpose().transpose() == a);
  const auto l = a.lift(6);
  CHECK(l.order() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(l(i, j) == 2 * a(i, j));
  CHECK_THROWS_AS(a.lift(4), butson::OrderMismatch);
  const auto [x, y] = butson::to_common_order(a, butson::get("M6"));
  CHECK(x.order() == 12);
  CHECK(y.order() == 12);
}

TEST_CASE("dephasing round-trip on the catalog") {
  for (const auto& e : butson::catalog()) {
    CAPTURE(e.name);
    check_round_trip(e.matrix);
  }
}

TEST_CASE("dephasing round-trip on 100 random grids") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 100; ++t) {
    const int q = 2 + t % 7;
    const int n = 1 + t % 7;
    check_round_trip(ButsonMatrix::from_exponents(q, oracle::random_grid(rng, q, n)));
  }
}

TEST_CASE("dephasing is idempotent and keeps the Hadamard property") {
  for (const auto& e : butson::catalog()) {
    const auto d = butson::dephase(e.matrix);
    CHECK(butson::dephase(d.matrix).matrix == d.matrix);
    CHECK(butson::is_hadamard_exact(d.matrix) == butson::is_hadamard_exact(e.matrix));
  }
}

TEST_CASE("dephased catalog forms match the printed standard forms") {
  CHECK(butson::dephase(butson::get("A10")).matrix == butson::get("A01"));
  CHECK(butson::dephase(butson::get("A20")).matrix == butson::get("A02"));
  CHECK(butson::dephase(butson::get("A30")).matrix == butson::get("A03"));
}

TEST_CASE("complex matrix helpers") {
  const auto m = butson::get("M6").embed();
  const auto adj = m.adjoint();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(std::abs(adj(i, j) - m(i, j)) < 1e-15);
  CHECK_FALSE(m.is_real());
  const auto prod = m * m.adjoint();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(std::abs(prod(i, j) - (i == j ? 6.0 : 0.0)) < 1e-12);
  CHECK_THROWS_AS(butson::ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), butson::ShapeError);
}
