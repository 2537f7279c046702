#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "butson/polynomial.hpp"

namespace butson {

/// Names with a written-out spectral function: A10..A60, A01, A02, A03, M6.
bool has_claimed_spectral_function(std::string_view name);

/// The written-out det(xI - H/sqrt 6), converted exactly into the
/// ScaledPoly convention. Throws UnknownMatrix for other names.
ScaledPoly claimed_spectral_function(std::string_view name);

/// Closed-form eigenvalues of H/sqrt 6 with multiplicity, for M6, M61, A1.
std::vector<std::complex<double>> claimed_spectrum(std::string_view name);

}  // namespace butson
