#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fsind {

/// Exact element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1)
/// modulo the n-th cyclotomic polynomial.
///
/// Stored as integer numerators over one positive common denominator,
/// always in lowest terms. Binary operations on different conductors embed
/// both operands into the lcm.
class CyclotomicNumber {
 public:
  CyclotomicNumber();  // zero in Q
  CyclotomicNumber(long long v);  // NOLINT(google-explicit-constructor)
  explicit CyclotomicNumber(const mpq_class& v);

  /// zeta_n^k.
  static CyclotomicNumber zeta(int n, long long k = 1);
  /// From coefficients in the power basis of Q(zeta_n); length phi(n).
  static CyclotomicNumber from_coefficients(int n, std::vector<mpq_class> coeffs);
  /// sum_j c[j] * zeta_n^j for j = 0..n-1 (any length-n vector).
  static CyclotomicNumber from_exponents(int n, const std::vector<mpz_class>& c, const mpz_class& den = 1);

  int conductor() const { return n_; }
  std::vector<mpq_class> coefficients() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class to_rational() const;  // throws if not rational
  /// Integer coefficients (an algebraic integer, the basis being integral).
  bool is_integral() const { return den_ == 1; }

  CyclotomicNumber embed(int m) const;  // n must divide m
  CyclotomicNumber conjugate() const;
  CyclotomicNumber galois(long long k) const;  // gcd(k, n) = 1
  CyclotomicNumber inverse() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber scaled(const mpq_class& r) const;

  bool operator==(const CyclotomicNumber& o) const;
  bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }
  /// Total order used for deterministic sorting: conductor, then coefficients.
  /// Only meaningful between numbers at the same conductor.
  bool lex_less(const CyclotomicNumber& o) const;

  std::string to_string() const;

 private:
  CyclotomicNumber(int n, std::vector<mpz_class> num, mpz_class den);
  void normalize();

  int n_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

long long euler_phi(long long n);
/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Accumulates sum c_j zeta_L^j over exponents j mod L and reduces once.
class ExponentAccumulator {
 public:
  explicit ExponentAccumulator(int conductor) : n_(conductor), c_(conductor) {}
  void add(long long exponent, const mpz_class& coeff) {
    long long j = ((exponent % n_) + n_) % n_;
    c_[static_cast<std::size_t>(j)] += coeff;
  }
  /// Adds x * zeta_L^shift for x at a conductor dividing L.
  void add(const CyclotomicNumber& x, const mpz_class& mult = 1, long long shift = 0);
  CyclotomicNumber value(const mpz_class& den = 1) const {
    return CyclotomicNumber::from_exponents(n_, c_, den);
  }

 private:
  int n_;
  std::vector<mpz_class> c_;
};

/// Element of F_{2^k} as a bit vector of polynomial coefficients.
struct F2kElement {
  std::uint64_t bits = 0;
  bool is_zero() const { return bits == 0; }
  bool operator==(const F2kElement&) const = default;
  auto operator<=>(const F2kElement&) const = default;
};

/// Ring homomorphism Z_(2)[zeta_N] -> F_{2^k} with zeta_{2^a} -> 1 and
/// zeta_m -> t for N = 2^a m, where t is a root of the lexicographically
/// smallest irreducible factor of Phi_m over F_2.
class Mod2Reduction {
 public:
  explicit Mod2Reduction(int ambient_conductor);

  int ambient() const { return ambient_; }
  int degree() const { return k_; }
  /// Minimal polynomial of t as a bit mask (bit i = coefficient of X^i).
  std::uint64_t modulus() const { return f_; }

  /// x must lie in a subfield Q(zeta_n), n | N, and be integral at 2
  /// (odd denominators allowed).
  F2kElement reduce(const CyclotomicNumber& x) const;
  F2kElement add(F2kElement a, F2kElement b) const { return {a.bits ^ b.bits}; }
  F2kElement mul(F2kElement a, F2kElement b) const;

 private:
  int ambient_;
  int two_part_, odd_part_;
  int k_;
  std::uint64_t f_;
  long long c_;  // inverse of the 2-part modulo the odd part
  std::vector<std::uint64_t> t_powers_;  // t^e for e in [0, odd_part)
};

}  // namespace fsind
