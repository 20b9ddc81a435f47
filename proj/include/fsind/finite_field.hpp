#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fsind {

/// Small finite field F_q, q = p^k, with table arithmetic.
///
/// Elements are integers 0..q-1 encoding polynomials over F_p in base p
/// modulo the smallest monic irreducible polynomial of degree k.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  /// x -> x^p.
  int frobenius(int a) const { return pow(a, p_); }
  /// Smallest generator of the multiplicative group.
  int primitive() const { return primitive_; }
  int from_int(long long n) const;
  bool is_square(int a) const;
  int element_order(int a) const;

 private:
  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
  int primitive_ = 1;
};

/// 2x2 matrix over a FiniteField, row-major (a b; c d).
struct Mat2 {
  int a, b, c, d;
};

/// Semilinear map v -> M * frob^f(v) on F_q^2 (column vectors).
struct SemilinearMap {
  Mat2 matrix;
  int frobenius_power = 0;
};

Mat2 mat_mul(const FiniteField& f, const Mat2& x, const Mat2& y);
int mat_det(const FiniteField& f, const Mat2& x);

}  // namespace fsind
