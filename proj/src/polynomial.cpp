#include "butson/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "butson/errors.hpp"

namespace butson {

namespace {

constexpr int kMaxLeibnizDimension = 8;

// Parity of a permutation from its cycle decomposition.
bool is_odd(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = 1;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 1;
}

std::int64_t integer_sqrt_exact(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

std::vector<std::complex<double>> ScaledPoly::numeric() const {
  std::vector<std::complex<double>> out(e.size());
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    out[static_cast<std::size_t>(k)] =
        e[static_cast<std::size_t>(k)].embed() * std::pow(static_cast<double>(n), -0.5 * static_cast<double>(d - k));
  }
  return out;
}

std::complex<double> ScaledPoly::evaluate(std::complex<double> x) const {
  const auto c = numeric();
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ScaledPoly ScaledPoly::lift(int m) const {
  ScaledPoly r{n, {}};
  r.e.reserve(e.size());
  for (const auto& c : e) r.e.push_back(c.lift(m));
  return r;
}

ScaledPoly ScaledPoly::conj() const {
  ScaledPoly r{n, {}};
  r.e.reserve(e.size());
  for (const auto& c : e) r.e.push_back(c.conj());
  return r;
}

ScaledPoly ScaledPoly::operator*(const ScaledPoly& other) const {
  if (other.n != n) throw ShapeError("scaled polynomials use different scale bases");
  const int m = common_order(order(), other.order());
  const ScaledPoly a = lift(m);
  const ScaledPoly b = other.lift(m);
  ScaledPoly r{n, std::vector<CycInt>(e.size() + other.e.size() - 1, CycInt(m))};
  for (std::size_t i = 0; i < a.e.size(); ++i)
    for (std::size_t j = 0; j < b.e.size(); ++j) r.e[i + j] += a.e[i] * b.e[j];
  return r;
}

ExactPoly charpoly_exact(const CycMatrix& m) {
  const int n = m.size();
  const int q = m.order();
  if (n > kMaxLeibnizDimension) throw ShapeError("exact characteristic polynomial limited to n <= 8");

  std::vector<CycInt> total(static_cast<std::size_t>(n) + 1, CycInt(q));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // prod_i (x [perm(i) == i] - m(i, perm(i)))
  std::vector<CycInt> term;
  do {
    term.assign(1, CycInt::integer(q, is_odd(perm) ? -1 : 1));
    for (int i = 0; i < n; ++i) {
      const int j = perm[static_cast<std::size_t>(i)];
      const CycInt& a = m(i, j);
      if (j != i) {
        for (auto& c : term) c *= -a;
        continue;
      }
      // multiply by (x - a)
      term.push_back(CycInt(q));
      for (std::size_t k = term.size() - 1; k > 0; --k) term[k] = term[k - 1] - a * term[k];
      term[0] = -(a * term[0]);
    }
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));

  return ExactPoly{q, std::move(total)};
}

ExactPoly charpoly_exact(const ButsonMatrix& b) { return charpoly_exact(b.to_cyc()); }

ScaledPoly scale(const ExactPoly& p, int n) {
  if (p.degree() != n) throw ShapeError("polynomial degree does not match dimension");
  return ScaledPoly{n, p.coeffs};
}

bool poly_eq(const ScaledPoly& a, const ScaledPoly& b) {
  if (a.n != b.n || a.degree() != b.degree()) throw ShapeError("scaled polynomials have different dimensions");
  const int m = common_order(a.order(), b.order());
  const ScaledPoly la = a.lift(m);
  const ScaledPoly lb = b.lift(m);
  return la.e == lb.e;
}

ScaledPoly from_display(int n, std::span<const DisplayCoefficient> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty display polynomial");
  int q = 1;
  for (const auto& c : coeffs) q = common_order(q, c.numerator.order());

  const int d = static_cast<int>(coeffs.size()) - 1;
  ScaledPoly r{n, {}};
  for (int k = 0; k <= d; ++k) {
    const auto& c = coeffs[static_cast<std::size_t>(k)];
    if (c.radicand_num < 0 || c.radicand_den <= 0) throw std::invalid_argument("radicand must be non-negative");
    if (c.numerator.is_zero()) {
      r.e.push_back(CycInt(q));
      continue;
    }
    // e_k = numerator * sqrt(radicand * n^(d - k))
    std::int64_t num = c.radicand_num;
    for (int p = 0; p < d - k; ++p) num = checked::mul(num, n);
    if (num % c.radicand_den != 0) throw std::invalid_argument("display coefficient does not clear to an integer multiple");
    const std::int64_t root = integer_sqrt_exact(num / c.radicand_den);
    if (root < 0) throw std::invalid_argument("display coefficient does not clear to an integer multiple");
    r.e.push_back(c.numerator.lift(q).scaled(root));
  }
  return r;
}

}  // namespace butson
