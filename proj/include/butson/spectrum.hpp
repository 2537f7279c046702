#pragma once

#include <complex>
#include <span>
#include <vector>

#include "butson/polynomial.hpp"

namespace butson {

struct Eigenvalue {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Eigenvalues with multiplicities, sorted by real then imaginary part.
struct Spectrum {
  std::vector<Eigenvalue> values;

  int total_multiplicity() const;
  /// Each value repeated according to its multiplicity.
  std::vector<std::complex<double>> expanded() const;
};

struct RootFinderOptions {
  double initial_radius = 1.2;
  double angular_offset = 0.4;  // radians
  int max_iterations = 1000;
  double step_tolerance = 1e-13;
};

struct RootFinderResult {
  std::vector<std::complex<double>> roots;
  int iterations = 0;
  /// Largest correction of the final sweep.
  double last_step = 0.0;
  bool converged = false;
};

/// Simultaneous (Weierstrass / Durand-Kerner) iteration for a monic
/// polynomial, coefficients constant term first.
RootFinderResult durand_kerner(std::span<const std::complex<double>> coeffs, const RootFinderOptions& options = {});

struct SpectrumOptions {
  RootFinderOptions root_finder;
  /// Approximations closer than this are treated as one multiple root.
  double grouping_radius = 1e-4;
  /// Refined values closer than this are merged.
  double cluster_radius = 1e-8;
};

/// Roots of the scaled characteristic polynomial with multiplicities.
///
/// Simultaneous iteration only resolves an m-fold root to about eps^(1/m),
/// so grouped approximations are replaced by their centroid and polished
/// with Newton's method on the (m-1)-th derivative. Every returned value
/// satisfies |p(value)| <= tol; ConvergenceError otherwise.
Spectrum spectrum_numeric(const ScaledPoly& p, double tol, const SpectrumOptions& options = {});

/// Smallest achievable maximum distance between the two lists over all
/// pairings. Both lists must have the same length (at most 8).
double matching_distance(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b);

}  // namespace butson
