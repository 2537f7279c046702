#include "butson/cyclo.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "butson/errors.hpp"

namespace butson {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

namespace {

void require_order(int q) {
  if (q < 1) throw std::invalid_argument("root order must be positive, got " + std::to_string(q));
}

// Exact quotient of polynomials with integer coefficients by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] = checked::sub(num[k - dn + j], checked::mul(c, den[j]));
  }
  return quot;
}

// Reduces a polynomial of arbitrary length modulo the monic modulus in place
// and truncates it to deg(modulus) coefficients.
void reduce_mod(std::vector<std::int64_t>& poly, const std::vector<std::int64_t>& modulus) {
  const std::size_t d = modulus.size() - 1;
  for (std::size_t k = poly.size(); k-- > d;) {
    const std::int64_t c = poly[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) poly[k - d + j] = checked::sub(poly[k - d + j], checked::mul(c, modulus[j]));
  }
  poly.resize(d, 0);
}

}  // namespace

int euler_phi(int q) {
  require_order(q);
  int result = q;
  int m = q;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int q) {
  require_order(q);
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(q); it != cache.end()) return it->second;
  }
  // x^q - 1 = prod_{d | q} Phi_d(x)
  std::vector<std::int64_t> poly(static_cast<std::size_t>(q) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(q)] = 1;
  for (int d = 1; d < q; ++d) {
    if (q % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(q, std::move(poly)).first->second;
}

int common_order(int a, int b) {
  require_order(a);
  require_order(b);
  return std::lcm(a, b);
}

CycInt::CycInt(int q) : q_(q), coeffs_(static_cast<std::size_t>(euler_phi(q)), 0) {}

CycInt::CycInt(int q, std::vector<std::int64_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {}

CycInt CycInt::integer(int q, std::int64_t value) {
  CycInt r(q);
  r.coeffs_[0] = value;
  return r;
}

CycInt CycInt::root(int q, std::int64_t k) {
  require_order(q);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
  counts[static_cast<std::size_t>(((k % q) + q) % q)] = 1;
  return from_exponent_counts(q, counts);
}

CycInt CycInt::from_polynomial(int q, std::span<const std::int64_t> poly) {
  require_order(q);
  // Fold zeta^q = 1 first so the remaining reduction works on degree < q.
  std::vector<std::int64_t> folded(static_cast<std::size_t>(q), 0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto& slot = folded[i % static_cast<std::size_t>(q)];
    slot = checked::add(slot, poly[i]);
  }
  return from_exponent_counts(q, folded);
}

CycInt CycInt::from_exponent_counts(int q, std::span<const std::int64_t> counts) {
  require_order(q);
  if (counts.size() != static_cast<std::size_t>(q)) throw ShapeError("exponent count vector must have length q");
  std::vector<std::int64_t> poly(counts.begin(), counts.end());
  reduce_mod(poly, cyclotomic_polynomial(q));
  return CycInt(q, std::move(poly));
}

bool CycInt::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void CycInt::require_same_order(const CycInt& other) const {
  if (q_ != other.q_) {
    throw OrderMismatch("cyclotomic order mismatch: " + std::to_string(q_) + " vs " + std::to_string(other.q_));
  }
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = checked::sub(0, c);
  return r;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) {
  require_same_order(other);
  const std::size_t d = coeffs_.size();
  std::vector<std::int64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      prod[i + j] = checked::add(prod[i + j], checked::mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  reduce_mod(prod, cyclotomic_polynomial(q_));
  coeffs_ = std::move(prod);
  return *this;
}

CycInt CycInt::scaled(std::int64_t factor) const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = checked::mul(c, factor);
  return r;
}

CycInt CycInt::conj() const { return galois(q_ - 1); }

CycInt CycInt::galois(int k) const {
  if (std::gcd(k, q_) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q_), 0);
  const auto q = static_cast<std::int64_t>(q_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto target = static_cast<std::size_t>(((static_cast<std::int64_t>(i) * k) % q + q) % q);
    counts[target] = checked::add(counts[target], coeffs_[i]);
  }
  return from_exponent_counts(q_, counts);
}

CycInt CycInt::lift(int m) const {
  require_order(m);
  if (m % q_ != 0) throw OrderMismatch("cannot lift order " + std::to_string(q_) + " into " + std::to_string(m));
  const std::size_t step = static_cast<std::size_t>(m / q_);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) counts[i * step] = coeffs_[i];
  return from_exponent_counts(m, counts);
}

std::complex<double> CycInt::embed() const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(q_);
    sum += static_cast<double>(coeffs_[i]) * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycInt::str() const {
  std::string unit = q_ == 3 ? "w" : q_ == 4 ? "i" : "z";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << unit;
    if (k > 1) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace butson
