#include <limits>
#include <random>

#include "butson/cyclo.hpp"
#include "butson/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using butson::CycInt;

namespace {

CycInt random_element(std::mt19937_64& rng, int q) {
  std::uniform_int_distribution<int> coef(-20, 20);
  std::vector<std::int64_t> poly(static_cast<std::size_t>(q) + 3);
  for (auto& c : poly) c = coef(rng);
  return CycInt::from_polynomial(q, poly);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("euler phi of small orders") {
  const int expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int q = 1; q <= 12; ++q) CHECK(butson::euler_phi(q) == expected[q]);
}

TEST_CASE("cyclotomic polynomials match the standard table") {
  using V = std::vector<std::int64_t>;
  CHECK(butson::cyclotomic_polynomial(1) == V{-1, 1});
  CHECK(butson::cyclotomic_polynomial(2) == V{1, 1});
  CHECK(butson::cyclotomic_polynomial(3) == V{1, 1, 1});
  CHECK(butson::cyclotomic_polynomial(4) == V{1, 0, 1});
  CHECK(butson::cyclotomic_polynomial(6) == V{1, -1, 1});
  CHECK(butson::cyclotomic_polynomial(8) == V{1, 0, 0, 0, 1});
  CHECK(butson::cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("Eisenstein identities") {
  const CycInt w = CycInt::root(3, 1);
  const CycInt one = CycInt::integer(3, 1);
  CHECK(w * w == -one - w);
  CHECK(w * w * w == one);
  CHECK(one + w + w * w == CycInt(3));
  CHECK(w.conj() == w * w);
  CHECK(CycInt::root(3, -1) == w * w);
  CHECK(CycInt::root(3, 7) == w);
  CHECK(w.str() == "w");
}

TEST_CASE("Gaussian identities") {
  const CycInt i = CycInt::root(4, 1);
  CHECK(i * i == CycInt::integer(4, -1));
  CHECK(i.conj() == -i);
  CHECK(CycInt::root(4, 2) == CycInt::integer(4, -1));
}

TEST_CASE("exponent counts sum roots") {
  // 1 + w + w^2 = 0 and 2*1 + 1*w = 2 + w
  const std::int64_t all[] = {1, 1, 1};
  CHECK(CycInt::from_exponent_counts(3, all).is_zero());
  const std::int64_t some[] = {2, 1, 0};
  CHECK(CycInt::from_exponent_counts(3, some) == CycInt::integer(3, 2) + CycInt::root(3, 1));
  const std::int64_t bad[] = {1, 1};
  CHECK_THROWS_AS(CycInt::from_exponent_counts(3, bad), butson::ShapeError);
}

TEST_CASE("ring axioms on 1000 random triples") {
  std::mt19937_64 rng(20240611);
  const int orders[] = {3, 4, 5, 6, 8, 12};
  for (int t = 0; t < 1000; ++t) {
    const int q = orders[static_cast<std::size_t>(t) % std::size(orders)];
    const CycInt a = random_element(rng, q);
    const CycInt b = random_element(rng, q);
    const CycInt c = random_element(rng, q);
    const CycInt zero(q);
    const CycInt one = CycInt::integer(q, 1);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a + (-a) == zero);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    // embedding is a ring homomorphism into C
    CHECK(close((a * b + c).embed(), a.embed() * b.embed() + c.embed(), 1e-6));
    CHECK(close(a.conj().embed(), std::conj(a.embed()), 1e-9));
  }
}

TEST_CASE("embedding of roots agrees with the complex exponential") {
  for (int q : {3, 4, 6, 12})
    for (int k = 0; k < q; ++k) CHECK(close(CycInt::root(q, k).embed(), oracle::root_of_unity(q, k), 1e-14));
}

TEST_CASE("lift and galois") {
  const CycInt w = CycInt::root(3, 1);
  CHECK(w.lift(6) == CycInt::root(6, 2));
  CHECK(w.lift(12) == CycInt::root(12, 4));
  CHECK(w.galois(2) == w.conj());
  CHECK_THROWS_AS(w.lift(4), butson::OrderMismatch);
  CHECK_THROWS_AS(CycInt::root(6, 1).galois(2), std::invalid_argument);
  CHECK(butson::common_order(3, 4) == 12);
  CHECK(butson::common_order(3, 6) == 6);
}

TEST_CASE("mixed orders are rejected") {
  CHECK_THROWS_AS(CycInt::root(3, 1) + CycInt::root(4, 1), butson::OrderMismatch);
  CHECK_THROWS_AS(CycInt::root(3, 1) * CycInt::root(4, 1), butson::OrderMismatch);
}

TEST_CASE("overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  const CycInt a = CycInt::integer(3, big);
  CHECK_THROWS_AS(a + a, butson::ArithmeticOverflow);
  CHECK_THROWS_AS(a * a, butson::ArithmeticOverflow);
  CHECK_THROWS_AS(butson::checked::mul(big, 4), butson::ArithmeticOverflow);
}
