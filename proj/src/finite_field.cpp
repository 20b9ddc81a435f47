#include "fsind/finite_field.hpp"

#include "fsind/errors.hpp"

namespace fsind {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;  // m monic
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(dm);
  return a;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const Poly& m, int p) {
  const int d = static_cast<int>(m.size()) - 1;
  for (int dd = 1; dd <= d / 2; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly f(dd + 1, 0);
      f[dd] = 1;
      int c = code;
      for (int i = 0; i < dd; ++i) {
        f[i] = c % p;
        c /= p;
      }
      Poly r = poly_mod(m, f, p);
      bool zero = true;
      for (int x : r)
        if (x != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (q < 2 || q > 4096) throw InvalidArgument("unsupported field size");
  p_ = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  k_ = 0;
  for (int r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw InvalidArgument("field size is not a prime power");
    ++k_;
  }
  if (!is_prime(p_)) throw InvalidArgument("field size is not a prime power");

  Poly modulus;
  if (k_ > 1) {
    int count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (int code = 0; code < count; ++code) {
      Poly m(k_ + 1, 0);
      m[k_] = 1;
      int c = code;
      for (int i = 0; i < k_; ++i) {
        m[i] = c % p_;
        c /= p_;
      }
      if (m[0] != 0 && is_irreducible(m, p_)) {
        modulus = m;
        break;
      }
    }
  }
  auto decode = [&](int x) {
    Poly v(k_);
    for (int i = 0; i < k_; ++i) {
      v[i] = x % p_;
      x /= p_;
    }
    return v;
  };
  auto encode = [&](const Poly& v) {
    int x = 0;
    for (int i = k_ - 1; i >= 0; --i) x = x * p_ + (i < static_cast<int>(v.size()) ? v[i] : 0);
    return x;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    Poly va = decode(a);
    Poly na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - va[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q; ++b) {
      Poly vb = decode(b);
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (va[i] + vb[i]) % p_;
      add_[a * q + b] = encode(s);
      Poly prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p_;
      if (k_ > 1) prod = poly_mod(prod, modulus, p_);
      else prod.resize(1);
      mul_[a * q + b] = encode(prod);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  for (int g = 1; g < q; ++g)
    if (element_order(g) == q - 1) {
      primitive_ = g;
      break;
    }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in finite field");
  return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  int b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int FiniteField::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return static_cast<int>(r);  // prime-field elements encode as themselves
}

bool FiniteField::is_square(int a) const {
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1 || p_ == 2;
}

int FiniteField::element_order(int a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  int x = a;
  int n = 1;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

Mat2 mat_mul(const FiniteField& f, const Mat2& x, const Mat2& y) {
  return Mat2{f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
              f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

int mat_det(const FiniteField& f, const Mat2& x) { return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c)); }

}  // namespace fsind
