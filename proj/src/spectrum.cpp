#include "butson/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "butson/errors.hpp"

namespace butson {

namespace {

using cplx = std::complex<double>;

cplx horner(std::span<const cplx> c, cplx x) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// sum_k |c_k| |x|^k, the scale against which a residual is judged.
double magnitude_bound(std::span<const cplx> c, cplx x) {
  double acc = 0.0;
  const double r = std::abs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

std::vector<cplx> derivative(std::span<const cplx> c) {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  return d;
}

// Newton's method on the (multiplicity-1)-th derivative, which has a simple
// root at an m-fold root of the original polynomial.
cplx polish(std::span<const cplx> coeffs, int multiplicity, cplx start) {
  std::vector<cplx> f(coeffs.begin(), coeffs.end());
  for (int k = 1; k < multiplicity; ++k) f = derivative(f);
  const std::vector<cplx> df = derivative(f);
  if (df.empty()) return start;

  cplx z = start;
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 100; ++it) {
    const cplx slope = horner(df, z);
    if (slope == 0.0) break;
    const cplx step = horner(f, z) / slope;
    const double size = std::abs(step);
    if (!(size < previous)) break;
    z -= step;
    previous = size;
    if (size <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

bool value_less(const Eigenvalue& a, const Eigenvalue& b) {
  constexpr double tie = 1e-9;
  if (std::abs(a.value.real() - b.value.real()) > tie) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

}  // namespace

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& v : values) total += v.multiplicity;
  return total;
}

std::vector<cplx> Spectrum::expanded() const {
  std::vector<cplx> out;
  for (const auto& v : values) out.insert(out.end(), static_cast<std::size_t>(v.multiplicity), v.value);
  return out;
}

RootFinderResult durand_kerner(std::span<const cplx> coeffs, const RootFinderOptions& options) {
  if (coeffs.size() < 2) throw std::invalid_argument("root finding needs degree >= 1");
  const cplx lead = coeffs.back();
  if (lead == 0.0) throw std::invalid_argument("leading coefficient is zero");
  std::vector<cplx> c(coeffs.begin(), coeffs.end());
  for (auto& v : c) v /= lead;

  const std::size_t d = c.size() - 1;
  RootFinderResult result;
  result.roots.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + options.angular_offset;
    result.roots[k] = std::polar(options.initial_radius, angle);
  }

  auto& z = result.roots;
  for (int it = 1; it <= options.max_iterations; ++it) {
    double largest = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      cplx denom = 1.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == 0.0) denom = 1e-300;
      const cplx step = horner(c, z[i]) / denom;
      z[i] -= step;
      largest = std::max(largest, std::abs(step));
    }
    result.iterations = it;
    result.last_step = largest;
    if (!std::isfinite(largest)) break;
    if (largest < options.step_tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

Spectrum spectrum_numeric(const ScaledPoly& p, double tol, const SpectrumOptions& options) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const std::vector<cplx> c = p.numeric();
  const RootFinderResult found = durand_kerner(c, options.root_finder);

  // A stalled iteration is acceptable only when it stalled at rounding level,
  // which is what happens around multiple roots.
  constexpr double kBackwardSlack = 1e4 * std::numeric_limits<double>::epsilon();
  for (const auto& z : found.roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ConvergenceError("root iteration diverged");
    if (!found.converged && std::abs(horner(c, z)) > kBackwardSlack * magnitude_bound(c, z)) {
      throw ConvergenceError("root iteration did not converge after " + std::to_string(found.iterations) +
                             " iterations (last step " + std::to_string(found.last_step) + ")");
    }
  }

  const std::size_t d = found.roots.size();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (std::abs(found.roots[i] - found.roots[j]) <= options.grouping_radius) parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<Eigenvalue> refined;
  for (std::size_t i = 0; i < d; ++i) {
    if (find_root(parent, i) != i) continue;
    cplx centroid = 0.0;
    int members = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (find_root(parent, j) == i) {
        centroid += found.roots[j];
        ++members;
      }
    centroid /= static_cast<double>(members);
    const cplx value = polish(c, members, centroid);
    if (std::abs(value - centroid) > options.grouping_radius) throw ConvergenceError("root polishing left its cluster");
    refined.push_back(Eigenvalue{value, members});
  }

  std::vector<Eigenvalue> merged;
  for (const auto& ev : refined) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Eigenvalue& m) { return std::abs(m.value - ev.value) <= options.cluster_radius; });
    if (it == merged.end()) {
      merged.push_back(ev);
    } else {
      it->multiplicity += ev.multiplicity;
    }
  }

  for (const auto& ev : merged) {
    const double residual = std::abs(horner(c, ev.value));
    if (residual > tol) {
      throw ConvergenceError("root residual " + std::to_string(residual) + " exceeds tolerance");
    }
  }
  std::sort(merged.begin(), merged.end(), value_less);
  return Spectrum{std::move(merged)};
}

double matching_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ShapeError("value lists differ in length");
  if (a.size() > 8) throw ShapeError("matching limited to 8 values");
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && worst < best; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.empty() ? 0.0 : best;
}

}  // namespace butson
