#include "fsind/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fsind/errors.hpp"

namespace fsind {

long long euler_phi(long long n) {
  if (n < 1) throw InvalidArgument("euler_phi: n < 1");
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct Tables {
  std::mutex mu;
  std::map<int, std::vector<long long>> phi_polys;
  // reduce[n][j] = coefficients of x^j mod Phi_n, j in [0, n)
  std::map<int, std::shared_ptr<const std::vector<std::vector<long long>>>> reduce;
};

Tables& tables() {
  static Tables t;
  return t;
}

std::vector<long long> compute_phi_poly(int n, std::map<int, std::vector<long long>>& cache) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, compute_phi_poly(d, cache)).first;
    const auto& q = it->second;  // monic
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long long> quot(dp - dq + 1, 0);
    for (int i = dp; i >= dq; --i) {
      long long c = p[i];
      quot[i - dq] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = std::move(quot);
  }
  return p;
}

std::shared_ptr<const std::vector<std::vector<long long>>> reduction_table(int n) {
  Tables& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.reduce.find(n);
  if (it != t.reduce.end()) return it->second;
  auto pit = t.phi_polys.find(n);
  if (pit == t.phi_polys.end()) pit = t.phi_polys.emplace(n, compute_phi_poly(n, t.phi_polys)).first;
  const auto& phi = pit->second;
  const int d = static_cast<int>(phi.size()) - 1;
  auto table = std::make_shared<std::vector<std::vector<long long>>>(n, std::vector<long long>(d, 0));
  std::vector<long long> cur(d, 0);
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    (*table)[j] = cur;
    // cur <- x * cur mod Phi_n
    long long top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi[i];
    cur[0] = -top * phi[0];
  }
  t.reduce.emplace(n, table);
  return table;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic_polynomial: n < 1");
  reduction_table(n);
  Tables& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.phi_polys.at(n);
}

CyclotomicNumber::CyclotomicNumber() : n_(1), num_(1, 0), den_(1) {}

CyclotomicNumber::CyclotomicNumber(long long v) : n_(1), num_(1, mpz_class(static_cast<long>(v))), den_(1) {}

CyclotomicNumber::CyclotomicNumber(const mpq_class& v) : n_(1), num_(1, v.get_num()), den_(v.get_den()) {
  normalize();
}

CyclotomicNumber::CyclotomicNumber(int n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CyclotomicNumber::normalize() {
  if (den_ == 0) throw InvalidArgument("cyclotomic: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  bool zero = true;
  for (const auto& c : num_)
    if (c != 0) zero = false;
  if (zero) den_ = 1;
}

CyclotomicNumber CyclotomicNumber::zeta(int n, long long k) {
  if (n < 1) throw InvalidArgument("zeta: conductor < 1");
  std::vector<mpz_class> c(n, 0);
  c[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
  return from_exponents(n, c);
}

CyclotomicNumber CyclotomicNumber::from_coefficients(int n, std::vector<mpq_class> coeffs) {
  if (n < 1 || static_cast<long long>(coeffs.size()) != euler_phi(n))
    throw InvalidArgument("from_coefficients: length must be phi(n)");
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
  return CyclotomicNumber(n, std::move(num), den);
}

CyclotomicNumber CyclotomicNumber::from_exponents(int n, const std::vector<mpz_class>& c, const mpz_class& den) {
  if (n < 1 || static_cast<int>(c.size()) != n) throw InvalidArgument("from_exponents: length must be n");
  auto table = reduction_table(n);
  const std::size_t d = (*table)[0].size();
  std::vector<mpz_class> num(d, 0);
  for (int j = 0; j < n; ++j) {
    if (c[j] == 0) continue;
    const auto& row = (*table)[j];
    for (std::size_t i = 0; i < d; ++i)
      if (row[i] != 0) num[i] += c[j] * static_cast<long>(row[i]);
  }
  return CyclotomicNumber(n, std::move(num), den);
}

std::vector<mpq_class> CyclotomicNumber::coefficients() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    mpq_class q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

mpq_class CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw InvalidArgument("to_rational: value is irrational: " + to_string());
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

CyclotomicNumber CyclotomicNumber::embed(int m) const {
  if (m % n_ != 0) throw InvalidArgument("embed: conductor does not divide target");
  if (m == n_) return *this;
  const long long step = m / n_;
  std::vector<mpz_class> c(m, 0);
  for (std::size_t j = 0; j < num_.size(); ++j) c[(j * step) % m] += num_[j];
  return from_exponents(m, c, den_);
}

CyclotomicNumber CyclotomicNumber::galois(long long k) const {
  if (std::gcd(k, static_cast<long long>(n_)) != 1) throw InvalidArgument("galois: k not coprime to conductor");
  if (n_ <= 2) return *this;
  const long long kk = ((k % n_) + n_) % n_;
  std::vector<mpz_class> c(n_, 0);
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) c[(static_cast<long long>(j) * kk) % n_] += num_[j];
  return from_exponents(n_, c, den_);
}

CyclotomicNumber CyclotomicNumber::conjugate() const { return galois(n_ - 1 > 0 ? n_ - 1 : 1); }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

namespace {

void align(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return;
  int m = std::lcm(a.conductor(), b.conductor());
  a = a.embed(m);
  b = b.embed(m);
}

}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  CyclotomicNumber b = o;
  align(*this, b);
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * b.den_ + b.num_[i] * den_;
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  CyclotomicNumber b = o;
  align(*this, b);
  if (n_ <= 2) {
    num_[0] *= b.num_[0];
    den_ *= b.den_;
    normalize();
    return *this;
  }
  std::vector<mpz_class> c(n_, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (b.num_[j] != 0) c[(i + j) % n_] += num_[i] * b.num_[j];
  }
  *this = from_exponents(n_, c, den_ * b.den_);
  return *this;
}

CyclotomicNumber CyclotomicNumber::scaled(const mpq_class& r) const {
  CyclotomicNumber out = *this;
  for (auto& c : out.num_) c *= r.get_num();
  out.den_ *= r.get_den();
  out.normalize();
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  if (is_rational()) return CyclotomicNumber(1 / to_rational()).embed(n_);
  // Solve (this * y) = 1 for the coefficient vector of y.
  const std::size_t d = num_.size();
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1));
  CyclotomicNumber basis = CyclotomicNumber(1).embed(n_);
  CyclotomicNumber z = zeta(n_);
  for (std::size_t j = 0; j < d; ++j) {
    CyclotomicNumber col = *this * basis;
    auto cc = col.coefficients();
    for (std::size_t i = 0; i < d; ++i) a[i][j] = cc[i];
    basis *= z;
  }
  a[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv][col] == 0) ++piv;
    if (piv == d) throw Corruption("inverse: singular multiplication matrix");
    std::swap(a[piv], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (std::size_t k = col; k <= d; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (std::size_t k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<mpq_class> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = a[i][d];
  return from_coefficients(n_, y);
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  if (n_ == o.n_) return den_ == o.den_ && num_ == o.num_;
  if (is_rational() && o.is_rational()) return den_ == o.den_ && num_[0] == o.num_[0];
  CyclotomicNumber a = *this, b = o;
  align(a, b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

bool CyclotomicNumber::lex_less(const CyclotomicNumber& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  // Compare coefficient by coefficient as rationals.
  for (std::size_t i = 0; i < num_.size(); ++i) {
    mpz_class l = num_[i] * o.den_, r = o.num_[i] * den_;
    if (l != r) return l < r;
  }
  return false;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    mpq_class q(num_[i], den_);
    q.canonicalize();
    if (any) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << "-";
    mpq_class aq = abs(q);
    if (i == 0) os << aq.get_str();
    else {
      if (aq != 1) os << aq.get_str() << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void ExponentAccumulator::add(const CyclotomicNumber& x, const mpz_class& mult, long long shift) {
  if (n_ % x.conductor() != 0) throw InvalidArgument("accumulator: conductor mismatch");
  if (x.denominator() != 1) throw InvalidArgument("accumulator: non-integral term");
  const long long step = n_ / x.conductor();
  const auto& num = x.numerators();
  for (std::size_t j = 0; j < num.size(); ++j)
    if (num[j] != 0) add(static_cast<long long>(j) * step + shift, num[j] * mult);
}

namespace {

using Bits = std::uint64_t;

int bit_degree(Bits p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

Bits polymulmod(Bits a, Bits b, Bits f) {
  const int d = bit_degree(f);
  Bits r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> d) & 1) a ^= f;
  }
  return r;
}

Bits polypowmod(Bits a, unsigned long long e, Bits f) {
  Bits r = 1;
  while (e) {
    if (e & 1) r = polymulmod(r, a, f);
    a = polymulmod(a, a, f);
    e >>= 1;
  }
  return r;
}

Bits polymod(Bits a, Bits f) {
  const int d = bit_degree(f);
  for (int i = bit_degree(a); i >= d; --i)
    if ((a >> i) & 1) a ^= f << (i - d);
  return a;
}

Bits polygcd(Bits a, Bits b) {
  while (b) {
    a = polymod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> out;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

// Rabin's test: X^(2^k) = X mod g and gcd(X^(2^(k/p)) - X, g) = 1.
bool irreducible_f2(Bits g, int k) {
  auto frob = [&](int times) {
    Bits x = 2;
    for (int i = 0; i < times; ++i) x = polymulmod(x, x, g);
    return x;
  };
  if (frob(k) != polymod(2, g)) return false;
  for (int p : prime_factors(k))
    if (polygcd(g, frob(k / p) ^ polymod(2, g)) != 1) return false;
  return true;
}

}  // namespace

Mod2Reduction::Mod2Reduction(int ambient_conductor) : ambient_(ambient_conductor) {
  if (ambient_ < 1) throw InvalidArgument("Mod2Reduction: conductor < 1");
  two_part_ = 1;
  odd_part_ = ambient_;
  while (odd_part_ % 2 == 0) {
    odd_part_ /= 2;
    two_part_ *= 2;
  }
  const int m = odd_part_;
  k_ = 1;
  if (m > 1) {
    long long x = 2 % m;
    while (x != 1) {
      x = (x * 2) % m;
      ++k_;
    }
  }
  if (k_ > 62) throw TooLarge("Mod2Reduction: residue degree too large");

  if (m == 1) {
    f_ = 0b11;  // X + 1
  } else {
    // Work in F_2[X]/g for some irreducible g of degree k.
    Bits g = 0;
    for (Bits cand = (Bits{1} << k_) | 1; cand < (Bits{1} << (k_ + 1)); cand += 2)
      if (irreducible_f2(cand, k_)) {
        g = cand;
        break;
      }
    if (g == 0) throw Corruption("Mod2Reduction: no irreducible polynomial found");
    const unsigned long long group_order = (1ULL << k_) - 1;
    Bits beta = 0;
    auto factors = prime_factors(m);
    for (Bits y = 2; y < (Bits{1} << k_); ++y) {
      Bits z = polypowmod(y, group_order / m, g);
      bool ok = true;
      for (int p : factors)
        if (polypowmod(z, m / p, g) == 1) ok = false;
      if (ok) {
        beta = z;
        break;
      }
    }
    if (beta == 0) throw Corruption("Mod2Reduction: no element of order m");
    // Minimal polynomial of beta^j over F_2, one j per cyclotomic coset.
    Bits best = 0;
    std::vector<bool> seen(m, false);
    for (int j = 1; j < m; ++j) {
      if (std::gcd(j, m) != 1 || seen[j]) continue;
      std::vector<Bits> poly{1};  // coefficients in F_{2^k}, lowest first
      long long e = j;
      for (int i = 0; i < k_; ++i) {
        seen[e] = true;
        Bits root = polypowmod(beta, static_cast<unsigned long long>(e), g);
        std::vector<Bits> next(poly.size() + 1, 0);
        for (std::size_t a = 0; a < poly.size(); ++a) {
          next[a + 1] ^= poly[a];
          next[a] ^= polymulmod(poly[a], root, g);
        }
        poly = std::move(next);
        e = (e * 2) % m;
      }
      Bits mask = 0;
      for (std::size_t a = 0; a < poly.size(); ++a) {
        if (poly[a] > 1) throw Corruption("Mod2Reduction: minimal polynomial not over F_2");
        if (poly[a] == 1) mask |= Bits{1} << a;
      }
      if (best == 0 || mask < best) best = mask;
    }
    f_ = best;
  }
  long long c = 0;
  for (long long v = 0; v < m; ++v)
    if ((v * two_part_) % m == 1 % m) {
      c = v;
      break;
    }
  c_ = c;
  t_powers_.resize(m);
  Bits t = polymod(2, f_);
  Bits cur = 1;
  for (int e = 0; e < m; ++e) {
    t_powers_[e] = cur;
    cur = polymulmod(cur, t, f_);
  }
}

F2kElement Mod2Reduction::reduce(const CyclotomicNumber& x) const {
  const int n = x.conductor();
  if (ambient_ % n != 0) throw InvalidArgument("reduce_mod2: conductor does not divide the ambient conductor");
  if (mpz_even_p(x.denominator().get_mpz_t())) throw InvalidArgument("reduce_mod2: not integral at 2: " + x.to_string());
  const long long m = odd_part_;
  const long long step = (c_ * ((ambient_ / n) % m)) % m;
  Bits r = 0;
  const auto& num = x.numerators();
  for (std::size_t j = 0; j < num.size(); ++j)
    if (mpz_odd_p(num[j].get_mpz_t())) r ^= t_powers_[(step * static_cast<long long>(j)) % m];
  return {r};
}

F2kElement Mod2Reduction::mul(F2kElement a, F2kElement b) const { return {polymulmod(a.bits, b.bits, f_)}; }

}  // namespace fsind
