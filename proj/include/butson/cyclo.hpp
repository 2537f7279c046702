#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace butson {

int euler_phi(int q);

/// Integer coefficients of the q-th cyclotomic polynomial, constant term
/// first. The result is cached and monic of degree euler_phi(q).
const std::vector<std::int64_t>& cyclotomic_polynomial(int q);

/// Element of Z[zeta_q], zeta_q = exp(2 pi i / q).
///
/// Stored as the coefficient vector of the unique representative of degree
/// < phi(q) modulo the q-th cyclotomic polynomial, so structural equality is
/// ring equality. All coefficient arithmetic is checked and throws
/// ArithmeticOverflow instead of wrapping.
class CycInt {
 public:
  /// Zero of Z[zeta_q].
  explicit CycInt(int q);

  static CycInt integer(int q, std::int64_t value);
  /// zeta_q^k for any integer k.
  static CycInt root(int q, std::int64_t k);
  /// Reduces sum_i poly[i] zeta^i; poly may have any length.
  static CycInt from_polynomial(int q, std::span<const std::int64_t> poly);
  /// sum_k counts[k] zeta^k where counts is indexed by exponent mod q.
  static CycInt from_exponent_counts(int q, std::span<const std::int64_t> counts);

  int order() const { return q_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  CycInt scaled(std::int64_t factor) const;

  /// Complex conjugation, zeta -> zeta^(q-1).
  CycInt conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, q) = 1.
  CycInt galois(int k) const;
  /// Image in Z[zeta_m] for a multiple m of q.
  CycInt lift(int m) const;

  std::complex<double> embed() const;

  /// Human-readable form such as "2w - 2" (q = 3) or "1 - i" (q = 4).
  std::string str() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;

 private:
  CycInt(int q, std::vector<std::int64_t> coeffs);
  void require_same_order(const CycInt& other) const;

  int q_;
  std::vector<std::int64_t> coeffs_;
};

/// Least common order for comparing elements of Z[zeta_a] and Z[zeta_b].
int common_order(int a, int b);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace butson
