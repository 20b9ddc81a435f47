#include "fsind/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fsind/errors.hpp"

namespace fsind {

namespace {

using i64 = long long;

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = static_cast<i64>((__int128)r * a % p);
    a = static_cast<i64>((__int128)a * a % p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

i64 primitive_root(i64 p) {
  auto fs = prime_factors(p - 1);
  for (i64 w = 2; w < p; ++w) {
    bool ok = true;
    for (i64 f : fs)
      if (powmod(w, (p - 1) / f, p) == 1) ok = false;
    if (ok) return w;
  }
  throw Corruption("no primitive root");
}

using Mat = std::vector<std::vector<i64>>;

// Rows of `rows` brought to reduced row echelon form mod p; returns pivots.
std::vector<std::size_t> rref(Mat& rows, i64 p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    i64 inv = invmod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      i64 f = rows[o][c];
      for (std::size_t k = c; k < ncols; ++k) rows[o][k] = ((rows[o][k] - f * rows[r][k]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of the nullspace of a (d x d) mod p, as column vectors.
std::vector<std::vector<i64>> nullspace(Mat a, i64 p) {
  const std::size_t d = a.size();
  auto pivots = rref(a, p);
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<i64>> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    std::vector<i64> v(d, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(xI - a) mod p via reduction to Hessenberg
// form; coefficients lowest degree first.
std::vector<i64> charpoly(Mat h, i64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    i64 inv = invmod(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      i64 u = h[r][m - 1] * inv % p;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = ((h[r][c] - u * h[m][c]) % p + p) % p;
      for (std::size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + u * h[c][r]) % p;
    }
  }
  std::vector<std::vector<i64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] * prod(h[k][k-1]) p_{i-1}
    std::vector<i64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = ((cur[k] - h[m - 1][m - 1] * prev[k]) % p + p) % p;
    }
    i64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      i64 coef = t * h[i - 1][m - 1] % p;
      if (coef != 0)
        for (std::size_t k = 0; k < polys[i - 1].size(); ++k)
          cur[k] = ((cur[k] - coef * polys[i - 1][k]) % p + p) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

std::vector<i64> roots_mod_p(const std::vector<i64>& poly, i64 p) {
  std::vector<i64> roots;
  for (i64 x = 0; x < p; ++x) {
    i64 v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = (v * x + poly[k]) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

// Sum of weight_i * x_i with a single reduction modulo the cyclotomic
// polynomial of the lcm conductor.
CyclotomicNumber weighted_sum(const std::vector<CyclotomicNumber>& xs, const std::vector<mpz_class>& weights) {
  int L = 1;
  mpz_class D = 1;
  for (const auto& x : xs) {
    L = std::lcm(L, x.conductor());
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.denominator().get_mpz_t());
  }
  std::vector<mpz_class> c(L, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (weights[i] == 0) continue;
    const auto& x = xs[i];
    const int step = L / x.conductor();
    mpz_class mult = weights[i] * (D / x.denominator());
    const auto& num = x.numerators();
    for (std::size_t j = 0; j < num.size(); ++j)
      if (num[j] != 0) c[(j * step) % L] += num[j] * mult;
  }
  return CyclotomicNumber::from_exponents(L, c, D);
}

}  // namespace

CharacterTable CharacterTable::compute(const Group& g) {
  CharacterTable t(g);
  const auto& cls = g.classes();
  const std::size_t k = cls.size();
  const i64 order = static_cast<i64>(g.order());
  const i64 e = static_cast<i64>(g.exponent());
  t.exponent_ = static_cast<std::size_t>(e);

  const i64 bound = 2 * static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(order)))) + 1;
  i64 p = e + 1;
  while (p <= bound || !is_prime(p)) p += e;
  t.prime_ = p;
  const i64 w = primitive_root(p);

  // Inverse element indices and class lookup.
  const std::size_t n = g.order();
  std::vector<std::size_t> cls_of(n), inv_idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    cls_of[i] = g.class_of_index(i);
    inv_idx[i] = *g.index_of(g.element(i).inverse());
  }
  std::vector<std::size_t> rep_idx(k);
  for (std::size_t l = 0; l < k; ++l) rep_idx[l] = *g.index_of(cls[l].representative);

  auto class_matrix = [&](std::size_t j) {
    Mat m(k, std::vector<i64>(k, 0));
    for (std::size_t x : g.class_members(j)) {
      const Perm& xinv = g.element(inv_idx[x]);
      for (std::size_t l = 0; l < k; ++l) {
        std::size_t y = *g.index_of(xinv * g.element(rep_idx[l]));
        ++m[cls_of[y]][l];
      }
    }
    for (auto& row : m)
      for (auto& v : row) v %= p;
    return m;
  };

  // Common eigenspaces, each stored as RREF row basis.
  struct Space {
    Mat basis;
    std::vector<std::size_t> pivots;
  };
  std::vector<Space> done, todo;
  {
    Space all;
    all.basis.assign(k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) all.basis[i][i] = 1;
    all.pivots.resize(k);
    std::iota(all.pivots.begin(), all.pivots.end(), 0);
    (k == 1 ? done : todo).push_back(std::move(all));
  }
  for (std::size_t j = 1; j < k && !todo.empty(); ++j) {
    Mat m = class_matrix(j);
    std::vector<Space> next;
    for (Space& s : todo) {
      const std::size_t d = s.basis.size();
      Mat r(d, std::vector<i64>(d, 0));
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i) {
          __int128 acc = 0;
          const auto& row = m[s.pivots[i]];
          for (std::size_t l = 0; l < k; ++l) acc += (__int128)row[l] * s.basis[c][l];
          r[i][c] = static_cast<i64>(acc % p);
        }
      std::vector<i64> roots = roots_mod_p(charpoly(r, p), p);
      std::size_t total = 0;
      for (i64 lambda : roots) {
        Mat shifted = r;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] - lambda + p) % p;
        auto ns = nullspace(shifted, p);
        total += ns.size();
        Space sub;
        for (const auto& y : ns) {
          std::vector<i64> v(k, 0);
          for (std::size_t c = 0; c < d; ++c)
            if (y[c] != 0)
              for (std::size_t l = 0; l < k; ++l) v[l] = (v[l] + y[c] * s.basis[c][l]) % p;
          sub.basis.push_back(std::move(v));
        }
        sub.pivots = rref(sub.basis, p);
        (sub.basis.size() == 1 ? done : next).push_back(std::move(sub));
      }
      if (total != d) throw Corruption("Dixon-Schneider: class matrix not diagonalizable mod p");
    }
    todo = std::move(next);
  }
  if (!todo.empty() || done.size() != k) throw Corruption("Dixon-Schneider: eigenspaces did not split");

  const i64 max_degree = static_cast<i64>(std::floor(std::sqrt(static_cast<double>(order)))) + 1;
  for (const Space& s : done) {
    std::vector<i64> v = s.basis[0];
    i64 inv0 = invmod(v[0], p);
    for (auto& x : v) x = x * inv0 % p;  // omega(identity class) = 1
    // chi(1)^2 = |G| / sum_l omega_l omega_{l*} / |K_l|
    i64 denom = 0;
    for (std::size_t l = 0; l < k; ++l) {
      std::size_t linv = g.inverse_class(l);
      denom = (denom + v[l] * v[linv] % p * invmod(static_cast<i64>(cls[l].size % p), p)) % p;
    }
    i64 target = order % p * invmod(denom, p) % p;
    i64 deg = 0;
    for (i64 d = 1; d <= max_degree; ++d)
      if (d * d % p == target && order % d == 0) {
        deg = d;
        break;
      }
    if (deg == 0) throw Corruption("Dixon-Schneider: no degree matches");
    std::vector<i64> modval(k);
    for (std::size_t l = 0; l < k; ++l)
      modval[l] = v[l] * (deg % p) % p * invmod(static_cast<i64>(cls[l].size % p), p) % p;

    ClassFunction chi(k);
    for (std::size_t l = 0; l < k; ++l) {
      const i64 o = static_cast<i64>(cls[l].element_order);
      const i64 root = powmod(w, (p - 1) / o, p);
      const i64 root_inv = invmod(root, p);
      const i64 inv_o = invmod(o % p, p);
      std::vector<mpz_class> mult(o);
      i64 sum = 0;
      for (i64 kk = 0; kk < o; ++kk) {
        i64 acc = 0;
        i64 step = powmod(root_inv, kk, p);
        i64 cur = 1;
        for (i64 j = 0; j < o; ++j) {
          acc = (acc + modval[g.power_class(l, j)] * cur) % p;
          cur = cur * step % p;
        }
        acc = acc * inv_o % p;
        if (acc > deg) throw Corruption("Dixon-Schneider: eigenvalue multiplicity out of range");
        mult[kk] = static_cast<long>(acc);
        sum += acc;
      }
      if (sum != deg) throw Corruption("Dixon-Schneider: multiplicities do not sum to the degree");
      chi[l] = CyclotomicNumber::from_exponents(static_cast<int>(o), mult);
    }
    t.chars_.push_back(std::move(chi));
  }
  t.finish();
  return t;
}

void CharacterTable::finish() {
  const Group& g = group_;
  const auto& cls = g.classes();
  const std::size_t k = cls.size();
  if (chars_.size() != k) throw Corruption("character table: wrong number of characters");
  exponent_ = g.exponent();

  auto degree_of = [](const ClassFunction& c) {
    mpq_class d = c[0].to_rational();
    if (d.get_den() != 1 || d <= 0) throw Corruption("character table: bad degree");
    return d.get_num().get_si();
  };
  auto is_trivial = [](const ClassFunction& c) {
    for (const auto& v : c)
      if (!(v.is_rational() && v.to_rational() == 1)) return false;
    return true;
  };
  std::sort(chars_.begin(), chars_.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    long da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (a[l].lex_less(b[l])) return true;
      if (b[l].lex_less(a[l])) return false;
    }
    return false;
  });
  if (!is_trivial(chars_[0])) throw Corruption("character table: trivial character missing");
  degrees_.clear();
  for (const auto& c : chars_) degrees_.push_back(degree_of(c));

  // Exact row orthogonality.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      CyclotomicNumber ip = inner_product(g, chars_[i], chars_[j]);
      if (ip != CyclotomicNumber(i == j ? 1 : 0))
        throw Corruption("character table: orthogonality fails for " + std::to_string(i) + "," + std::to_string(j));
    }

  // Indicators, reality, complex conjugates.
  eps_.assign(k, 0);
  real_.assign(k, false);
  conj_.assign(k, 0);
  std::vector<mpz_class> sizes;
  for (const auto& c : cls) sizes.emplace_back(static_cast<unsigned long>(c.size));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<CyclotomicNumber> sq(k);
    for (std::size_t l = 0; l < k; ++l) sq[l] = chars_[i][g.square_class(l)];
    mpq_class eps = weighted_sum(sq, sizes).to_rational() / mpq_class(static_cast<unsigned long>(g.order()));
    if (eps.get_den() != 1 || eps < -1 || eps > 1)
      throw Corruption("character table: indicator out of range: " + eps.get_str());
    eps_[i] = static_cast<int>(eps.get_num().get_si());
    ClassFunction cj(k);
    for (std::size_t l = 0; l < k; ++l) cj[l] = chars_[i][g.inverse_class(l)];
    conj_[i] = find_character(cj);
    if (conj_[i] == static_cast<std::size_t>(-1)) throw Corruption("character table: conjugate not found");
    for (std::size_t l = 0; l < k; ++l)
      if (cj[l] != chars_[i][l].conjugate()) throw Corruption("character table: inverse class value mismatch");
    real_[i] = conj_[i] == i;
    if ((eps_[i] == 0) == real_[i]) throw Corruption("character table: indicator/reality mismatch");
  }

  // 2-rationality and 2-conjugate families.
  const long long e = static_cast<long long>(exponent_);
  long long odd = e;
  while (odd % 2 == 0) odd /= 2;
  std::vector<std::size_t> family(k, static_cast<std::size_t>(-1));
  two_rational_.assign(k, true);
  std::vector<std::vector<std::size_t>> perms;
  for (long long kk = 1; kk <= e; kk += odd) {
    if (std::gcd(kk, e) != 1) continue;
    auto perm = galois_perm(kk);
    for (std::size_t i = 0; i < k; ++i)
      if (perm[i] != i) two_rational_[i] = false;
    perms.push_back(std::move(perm));
  }
  families_.clear();
  for (std::size_t i = 0; i < k; ++i) {
    if (family[i] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> orbit;
    for (const auto& perm : perms) {
      std::size_t j = perm[i];
      if (family[j] == static_cast<std::size_t>(-1)) {
        family[j] = families_.size();
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    families_.push_back(std::move(orbit));
  }
}

std::vector<std::size_t> CharacterTable::galois_perm(long long kk) const {
  const Group& g = group_;
  const std::size_t k = chars_.size();
  if (std::gcd(kk, static_cast<long long>(exponent_)) != 1) throw InvalidArgument("galois_perm: k not coprime");
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) {
    ClassFunction image(k);
    for (std::size_t l = 0; l < k; ++l) {
      image[l] = chars_[i][g.power_class(l, kk)];
      if (image[l] != chars_[i][l].galois(kk))
        throw Corruption("galois action disagrees with the power map");
    }
    perm[i] = find_character(image);
    if (perm[i] == static_cast<std::size_t>(-1)) throw Corruption("galois image is not irreducible");
  }
  return perm;
}

std::size_t CharacterTable::find_character(const ClassFunction& f) const {
  for (std::size_t i = 0; i < chars_.size(); ++i)
    if (chars_[i] == f) return i;
  return static_cast<std::size_t>(-1);
}

ClassFunction CharacterTable::sqrt_count() const {
  const std::size_t k = chars_.size();
  ClassFunction theta(k);
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<CyclotomicNumber> vals;
    std::vector<mpz_class> weights;
    for (std::size_t i = 0; i < k; ++i) {
      vals.push_back(chars_[i][l]);
      weights.emplace_back(eps_[i]);
    }
    theta[l] = weighted_sum(vals, weights);
  }
  if (group_.order() <= 10000) {
    auto direct = enumerate_sqrt_counts(group_);
    for (std::size_t l = 0; l < k; ++l)
      if (theta[l] != CyclotomicNumber(static_cast<long long>(direct[l])))
        throw Corruption("square root count disagrees with enumeration on class " + std::to_string(l));
  }
  return theta;
}

std::vector<std::size_t> CharacterTable::odd_classes() const {
  std::vector<std::size_t> out;
  const auto& cls = group_.classes();
  for (std::size_t l = 0; l < cls.size(); ++l)
    if (cls[l].element_order % 2 == 1) out.push_back(l);
  return out;
}

nlohmann::json cyclotomic_to_json(const CyclotomicNumber& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j) {
  int n = j.at("conductor").get<int>();
  std::vector<mpq_class> coeffs;
  for (const auto& c : j.at("coeffs")) {
    mpq_class q(mpz_class(c.at(0).get<std::string>()), mpz_class(c.at(1).get<std::string>()));
    q.canonicalize();
    coeffs.push_back(q);
  }
  return CyclotomicNumber::from_coefficients(n, std::move(coeffs));
}

nlohmann::json CharacterTable::to_json(const std::string& groupspec) const {
  const auto& cls = group_.classes();
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t l = 0; l < cls.size(); ++l) {
    std::vector<std::size_t> pm;
    for (std::size_t j = 0; j < cls[l].element_order; ++j) pm.push_back(group_.power_class(l, static_cast<long long>(j)));
    classes.push_back({{"order", cls[l].element_order}, {"size", cls[l].size}, {"powermap", pm}});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& c : chars_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : c) row.push_back(cyclotomic_to_json(v));
    chars.push_back(row);
  }
  return {{"groupspec", groupspec}, {"order", group_.order()}, {"classes", classes}, {"chars", chars}, {"eps", eps_}};
}

CharacterTable CharacterTable::from_json(const Group& g, const nlohmann::json& doc) {
  CharacterTable t(g);
  const auto& cls = g.classes();
  try {
    if (doc.at("order").get<std::size_t>() != g.order()) throw Corruption("cached table: group order mismatch");
    const auto& jc = doc.at("classes");
    if (jc.size() != cls.size()) throw Corruption("cached table: class count mismatch");
    for (std::size_t l = 0; l < cls.size(); ++l) {
      if (jc[l].at("order").get<std::size_t>() != cls[l].element_order ||
          jc[l].at("size").get<std::size_t>() != cls[l].size)
        throw Corruption("cached table: class data mismatch");
      auto pm = jc[l].at("powermap").get<std::vector<std::size_t>>();
      for (std::size_t j = 0; j < pm.size(); ++j)
        if (pm[j] != g.power_class(l, static_cast<long long>(j))) throw Corruption("cached table: power map mismatch");
    }
    for (const auto& row : doc.at("chars")) {
      ClassFunction c;
      for (const auto& v : row) c.push_back(cyclotomic_from_json(v));
      if (c.size() != cls.size()) throw Corruption("cached table: row length mismatch");
      t.chars_.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Corruption(std::string("cached table: ") + e.what());
  }
  t.finish();
  if (doc.at("eps").get<std::vector<int>>() != t.eps_) throw Corruption("cached table: indicator mismatch");
  return t;
}

ClassFunction class_function(const Group& g, const std::function<CyclotomicNumber(const Perm&)>& f) {
  ClassFunction out;
  for (const auto& c : g.classes()) out.push_back(f(c.representative));
  return out;
}

ClassFunction trivial_character(const Group& g) { return ClassFunction(g.num_classes(), CyclotomicNumber(1)); }

ClassFunction natural_perm_character(const Group& g) {
  return class_function(g, [](const Perm& x) {
    long long fixed = 0;
    for (std::size_t i = 0; i < x.degree(); ++i)
      if (x[i] == i) ++fixed;
    return CyclotomicNumber(fixed);
  });
}

namespace {

CyclotomicNumber inner_product_over(const Group& g, const ClassFunction& a, const ClassFunction& b, bool odd_only) {
  const auto& cls = g.classes();
  if (a.size() != cls.size() || b.size() != cls.size()) throw InvalidArgument("inner_product: length mismatch");
  std::vector<CyclotomicNumber> terms;
  std::vector<mpz_class> weights;
  for (std::size_t l = 0; l < cls.size(); ++l) {
    if (odd_only && cls[l].element_order % 2 == 0) continue;
    if (a[l].is_zero() || b[l].is_zero()) continue;
    terms.push_back(a[l] * b[l].conjugate());
    weights.emplace_back(static_cast<unsigned long>(cls[l].size));
  }
  if (terms.empty()) return CyclotomicNumber(0);
  return weighted_sum(terms, weights).scaled(mpq_class(1, static_cast<unsigned long>(g.order())));
}

}  // namespace

CyclotomicNumber inner_product(const Group& g, const ClassFunction& a, const ClassFunction& b) {
  return inner_product_over(g, a, b, false);
}

CyclotomicNumber inner_product_odd(const Group& g, const ClassFunction& a, const ClassFunction& b) {
  return inner_product_over(g, a, b, true);
}

ClassFunction restrict_to(const Group& g, const ClassFunction& f, const Group& h) {
  if (!h.is_subgroup_of(g)) throw NotMember("restrict: not a subgroup");
  ClassFunction out;
  for (const auto& c : h.classes()) out.push_back(f[g.class_of(c.representative)]);
  return out;
}

ClassFunction induce(const Group& h, const ClassFunction& f, const Group& g) {
  if (!h.is_subgroup_of(g)) throw NotMember("induce: not a subgroup");
  const auto& gcls = g.classes();
  const auto& hcls = h.classes();
  std::vector<std::vector<CyclotomicNumber>> terms(gcls.size());
  std::vector<std::vector<mpz_class>> weights(gcls.size());
  for (std::size_t l = 0; l < hcls.size(); ++l) {
    std::size_t K = g.class_of(hcls[l].representative);
    terms[K].push_back(f[l]);
    weights[K].emplace_back(static_cast<unsigned long>(hcls[l].size));
  }
  ClassFunction out(gcls.size());
  for (std::size_t K = 0; K < gcls.size(); ++K) {
    if (terms[K].empty()) continue;
    // theta^G(x) = |G| / (|H| |K|) * sum_{L in K} |L| theta(L)
    mpq_class factor(static_cast<unsigned long>(g.order()),
                     static_cast<unsigned long>(h.order()) * static_cast<unsigned long>(gcls[K].size));
    factor.canonicalize();
    out[K] = weighted_sum(terms[K], weights[K]).scaled(factor);
  }
  return out;
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw InvalidArgument("class function length mismatch");
  ClassFunction out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ClassFunction scale(const ClassFunction& a, const CyclotomicNumber& c) {
  ClassFunction out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

ClassFunction conjugate(const ClassFunction& a) {
  ClassFunction out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].conjugate();
  return out;
}

std::vector<std::size_t> enumerate_sqrt_counts(const Group& g) {
  std::vector<std::size_t> per_class(g.num_classes(), 0);
  for (const Perm& y : g.elements()) ++per_class[g.class_of(y * y)];
  for (std::size_t l = 0; l < per_class.size(); ++l) per_class[l] /= g.classes()[l].size;
  return per_class;
}

}  // namespace fsind
