#include "butson/catalog.hpp"
#include "butson/claimed.hpp"
#include "butson/errors.hpp"
#include "butson/polynomial.hpp"
#include "butson/spectrum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cd = std::complex<double>;

namespace {

butson::Spectrum spectrum_of(const butson::ButsonMatrix& b) {
  return butson::spectrum_numeric(butson::scale(butson::charpoly_exact(b), b.size()), 1e-8);
}

}  // namespace

TEST_CASE("Durand-Kerner on simple roots") {
  // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
  const cd c[] = {6.0, -7.0, 0.0, 1.0};
  const auto r = butson::durand_kerner(c);
  CHECK(r.converged);
  CHECK(r.roots.size() == 3);
  CHECK(oracle::matching(r.roots, {1.0, 2.0, -3.0}) < 1e-12);
}

TEST_CASE("Durand-Kerner rejects degenerate input") {
  const cd constant[] = {1.0};
  CHECK_THROWS_AS(butson::durand_kerner(constant), std::invalid_argument);
  const cd zero_lead[] = {1.0, 0.0};
  CHECK_THROWS_AS(butson::durand_kerner(zero_lead), std::invalid_argument);
}

TEST_CASE("triple roots are recovered with multiplicity") {
  const auto s = spectrum_of(butson::get("M6"));
  REQUIRE(s.values.size() == 2);
  CHECK(std::abs(s.values[0].value - cd(-1.0)) < 1e-12);
  CHECK(s.values[0].multiplicity == 3);
  CHECK(std::abs(s.values[1].value - cd(1.0)) < 1e-12);
  CHECK(s.values[1].multiplicity == 3);
  CHECK(s.total_multiplicity() == 6);
}

TEST_CASE("numeric spectra agree with a dense eigensolver") {
  for (const auto& e : butson::catalog()) {
    CAPTURE(e.name);
    const auto s = spectrum_of(e.matrix);
    CHECK(s.total_multiplicity() == 6);
    // Dense solvers resolve a multiple root only to about eps^(1/m).
    CHECK(butson::matching_distance(s.expanded(), oracle::eigenvalues_normalized(e.matrix)) < 1e-4);
  }
}

TEST_CASE("unitary spectra lie on the unit circle") {
  for (const auto& e : butson::catalog()) {
    if (!butson::is_hadamard_exact(e.matrix)) continue;
    CAPTURE(e.name);
    for (const auto& v : spectrum_of(e.matrix).values) CHECK(std::abs(std::abs(v.value) - 1.0) < 1e-10);
  }
}

TEST_CASE("closed-form spectra") {
  for (const char* name : {"M6", "M61", "A1", "A2", "A3"}) {
    CAPTURE(name);
    const std::string key = name[0] == 'A' ? "A1" : name;
    const auto expected = butson::claimed_spectrum(key);
    CHECK(butson::matching_distance(spectrum_of(butson::get(name)).expanded(), expected) < 1e-10);
  }
  CHECK_THROWS_AS(butson::claimed_spectrum("F6"), butson::UnknownMatrix);
}

TEST_CASE("spectrum values are sorted by real then imaginary part") {
  const auto s = spectrum_of(butson::get("A10"));
  for (std::size_t k = 1; k < s.values.size(); ++k) {
    const cd a = s.values[k - 1].value;
    const cd b = s.values[k].value;
    CHECK((a.real() < b.real() + 1e-9));
  }
}

TEST_CASE("tolerance guard") {
  const auto p = butson::scale(butson::charpoly_exact(butson::get("A1")), 6);
  CHECK_THROWS_AS(butson::spectrum_numeric(p, 0.0), std::invalid_argument);
  butson::SpectrumOptions starved;
  starved.root_finder.max_iterations = 2;
  CHECK_THROWS_AS(butson::spectrum_numeric(p, 1e-8, starved), butson::ConvergenceError);
}

TEST_CASE("matching distance") {
  const cd a[] = {1.0, cd(0.0, 1.0), -1.0};
  const cd b[] = {-1.0, 1.0, cd(0.0, 1.0)};
  CHECK(butson::matching_distance(a, b) == 0.0);
  const cd c[] = {-1.0, 1.0, cd(0.0, 1.5)};
  CHECK(butson::matching_distance(a, c) == doctest::Approx(0.5));
  const cd shorter[] = {1.0};
  CHECK_THROWS_AS(butson::matching_distance(a, shorter), butson::ShapeError);
}
