#include "butson/claimed.hpp"

#include <array>
#include <cmath>
#include <string>

#include "butson/errors.hpp"

namespace butson {

namespace {

// a + b w in Z[w].
CycInt eis(std::int64_t a, std::int64_t b) { return CycInt::integer(3, a) + CycInt::root(3, 1).scaled(b); }

// Radicands used by the written coefficients.
DisplayCoefficient sqrt_two_thirds(CycInt c) { return {std::move(c), 2, 3}; }
DisplayCoefficient half(CycInt c) { return {std::move(c), 1, 4}; }
DisplayCoefficient over_root6(CycInt c) { return {std::move(c), 1, 6}; }
DisplayCoefficient plain(std::int64_t v) { return {CycInt::integer(3, v), 1, 1}; }

ScaledPoly sextic(std::array<DisplayCoefficient, 7> ascending) { return from_display(6, ascending); }

// (x^2 - 1)(x^4 + b3 x^3 + x^2 + b1 x + 1) with b3, b1 over sqrt 6.
ScaledPoly split_form(CycInt b3, CycInt b1) {
  const std::array<DisplayCoefficient, 3> quadratic = {plain(-1), plain(0), plain(1)};
  const std::array<DisplayCoefficient, 5> quartic = {plain(1), over_root6(std::move(b1)), plain(1), over_root6(std::move(b3)), plain(1)};
  return from_display(6, quadratic) * from_display(6, quartic);
}

}  // namespace

bool has_claimed_spectral_function(std::string_view name) {
  for (std::string_view n : {"A10", "A20", "A30", "A40", "A50", "A60", "A01", "A02", "A03", "M6"})
    if (n == name) return true;
  return false;
}

ScaledPoly claimed_spectral_function(std::string_view name) {
  const CycInt one_plus_2w = eis(1, 2);
  const CycInt w_plus_2 = eis(2, 1);
  const CycInt w_minus_1 = eis(-1, 1);
  const CycInt one_minus_w = eis(1, -1);

  if (name == "A10") {
    return sextic({plain(-1), sqrt_two_thirds(w_plus_2), half(-one_plus_2w), over_root6(one_plus_2w), half(-one_plus_2w),
                   sqrt_two_thirds(w_minus_1), plain(1)});
  }
  if (name == "A20") {
    return sextic({plain(-1), sqrt_two_thirds(-w_plus_2), half(-w_plus_2), over_root6(-one_plus_2w), half(one_minus_w),
                   sqrt_two_thirds(one_minus_w), plain(1)});
  }
  if (name == "A30") {
    return sextic({plain(-1), sqrt_two_thirds(-one_plus_2w), half(w_plus_2), over_root6(one_plus_2w), half(w_minus_1),
                   sqrt_two_thirds(-one_plus_2w), plain(1)});
  }
  if (name == "A40") {
    return sextic({plain(-1), sqrt_two_thirds(one_plus_2w), half(one_minus_w), over_root6(-one_plus_2w), half(-w_plus_2),
                   sqrt_two_thirds(one_plus_2w), plain(1)});
  }
  if (name == "A50") {
    return sextic({plain(-1), sqrt_two_thirds(w_minus_1), half(w_minus_1), over_root6(one_plus_2w), half(w_plus_2),
                   sqrt_two_thirds(w_plus_2), plain(1)});
  }
  if (name == "A60") {
    return sextic({plain(-1), sqrt_two_thirds(-w_minus_1), half(one_plus_2w), over_root6(-one_plus_2w), half(one_plus_2w),
                   sqrt_two_thirds(-w_plus_2), plain(1)});
  }
  if (name == "A01" || name == "A03") return split_form(one_minus_w, w_plus_2);
  if (name == "A02") return split_form(w_plus_2, one_minus_w);
  if (name == "M6") {
    const std::array<DisplayCoefficient, 3> quadratic = {plain(-1), plain(0), plain(1)};
    const ScaledPoly f = from_display(6, quadratic);
    return f * f * f;
  }
  throw UnknownMatrix("no written spectral function for '" + std::string(name) + "'");
}

std::vector<std::complex<double>> claimed_spectrum(std::string_view name) {
  using cplx = std::complex<double>;
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  if (name == "M6") return {-1.0, -1.0, -1.0, 1.0, 1.0, 1.0};
  if (name == "M61") return {-1.0, -1.0, 1.0, 1.0, cplx(-r2, 1.0) / r3, -cplx(r2, 1.0) / r3};
  if (name == "A1") {
    // exponent 2 read as multiplicity
    const cplx lo = cplx(r3, -r5) / (2.0 * r2);
    const cplx hi = cplx(r3, r5) / (2.0 * r2);
    return {-1.0, 1.0, lo, lo, hi, hi};
  }
  throw UnknownMatrix("no closed-form spectrum for '" + std::string(name) + "'");
}

}  // namespace butson
