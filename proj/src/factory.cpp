#include "fsind/factory.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "fsind/errors.hpp"

namespace fsind {

namespace {

bool is_two_power(int n) { return n > 0 && (n & (n - 1)) == 0; }

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

std::string or_default(std::string name, std::string fallback) {
  return name.empty() ? std::move(fallback) : std::move(name);
}

void require_order(const Group& g, std::size_t expected, const char* what) {
  if (g.order() != expected)
    throw Corruption(std::string(what) + ": expected order " + std::to_string(expected) + ", got " +
                     std::to_string(g.order()));
}

}  // namespace

Group cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic: n must be positive");
  std::vector<Point> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Group::generate({Perm(img)}, "C" + std::to_string(n));
}

Group dihedral(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("dihedral: order must be even and >= 4");
  if (n == 4)
    return Group::generate({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                           "D4");
  const int m = n / 2;
  std::vector<Point> rot(m), ref(m);
  for (int i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    ref[i] = static_cast<Point>(mod(-i, m));
  }
  Group g = Group::generate({Perm(rot), Perm(ref)}, "D" + std::to_string(n));
  require_order(g, n, "dihedral");
  return g;
}

Group quaternion(int n) {
  if (n < 8 || !is_two_power(n)) throw InvalidArgument("quaternion: order must be 2^k >= 8");
  return metacyclic(n / 2, 2, n / 2 - 1, n / 4, "Q" + std::to_string(n));
}

Group semidihedral(int n) {
  if (n < 16 || !is_two_power(n)) throw InvalidArgument("semidihedral: order must be 2^k >= 16");
  return metacyclic(n / 2, 2, n / 4 - 1, 0, "SD" + std::to_string(n));
}

Group modular(int n) {
  if (n < 16 || !is_two_power(n)) throw InvalidArgument("modular: order must be 2^k >= 16");
  return metacyclic(n / 2, 2, n / 4 + 1, 0, "M" + std::to_string(n));
}

Group symmetric(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("symmetric: degree out of range");
  if (n == 1) return Group::trivial(1).with_name("S1");
  std::vector<Point> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return Group::generate({Perm(cyc), Perm::from_cycles(n, {{0, 1}})}, "S" + std::to_string(n));
}

Group alternating(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("alternating: degree out of range");
  if (n < 3) return Group::trivial(n).with_name("A" + std::to_string(n));
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return Group::generate(gens, "A" + std::to_string(n));
}

Group metacyclic(int m, int k, int s, int t, std::string name) {
  return abelian_extension({m}, {s}, k, {t},
                           or_default(std::move(name), "Meta(" + std::to_string(m) + "," + std::to_string(k) +
                                                           "," + std::to_string(s) + "," + std::to_string(t) + ")"));
}

Group abelian_extension(const std::vector<int>& moduli, const std::vector<int>& action, int k,
                        const std::vector<int>& tail, std::string name) {
  const std::size_t r = moduli.size();
  if (r == 0 || action.size() != r * r || tail.size() != r || k < 1)
    throw InvalidArgument("abelian_extension: inconsistent parameters");
  long long size_a = 1;
  for (int m : moduli) {
    if (m < 1) throw InvalidArgument("abelian_extension: bad modulus");
    size_a *= m;
  }
  const long long total = size_a * k;
  if (total > 4096) throw TooLarge("abelian_extension: regular representation too large");

  auto decode = [&](long long code) {
    std::vector<int> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = static_cast<int>(code % moduli[i]);
      code /= moduli[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    long long code = 0;
    for (std::size_t i = r; i-- > 0;) code = code * moduli[i] + mod(v[i], moduli[i]);
    return code;
  };
  // Powers S^j of the action matrix, reduced entrywise modulo the row modulus.
  std::vector<std::vector<long long>> powers(k);
  powers[0].assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) powers[0][i * r + i] = 1;
  for (int j = 1; j < k; ++j) {
    powers[j].assign(r * r, 0);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        long long acc = 0;
        for (std::size_t c = 0; c < r; ++c) acc += static_cast<long long>(action[a * r + c]) * powers[j - 1][c * r + b];
        powers[j][a * r + b] = mod(acc, moduli[a]);
      }
  }
  // (v, j) * (w, l) = (v + S^j w + carry * tail, (j + l) mod k)
  auto multiply = [&](long long x, long long y) {
    std::vector<int> v = decode(x % size_a), w = decode(y % size_a);
    int j = static_cast<int>(x / size_a), l = static_cast<int>(y / size_a);
    std::vector<int> out(r);
    for (std::size_t a = 0; a < r; ++a) {
      long long acc = v[a];
      for (std::size_t b = 0; b < r; ++b) acc += powers[j][a * r + b] * w[b];
      if (j + l >= k) acc += tail[a];
      out[a] = mod(acc, moduli[a]);
    }
    return ((j + l) % k) * size_a + encode(out);
  };
  auto right_mult = [&](long long g) {
    std::vector<Point> img(total);
    for (long long x = 0; x < total; ++x) img[x] = static_cast<Point>(multiply(x, g));
    return Perm(img);
  };
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    gens.push_back(right_mult(encode(e)));
  }
  gens.push_back(right_mult(size_a));  // the element b
  Group g = Group::generate(gens, or_default(std::move(name), "AbExt"));
  // A non-associative multiplication table shows up as a wrong order.
  require_order(g, static_cast<std::size_t>(total), "abelian_extension");
  return g;
}

Group affine_group(int m, int r, const std::vector<std::vector<int>>& matrices, std::string name) {
  if (m < 2 || r < 1) throw InvalidArgument("affine_group: bad parameters");
  long long npts = 1;
  for (int i = 0; i < r; ++i) npts *= m;
  if (npts > 4096) throw TooLarge("affine_group: too many points");
  auto decode = [&](long long code) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) {
      v[i] = static_cast<int>(code % m);
      code /= m;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    long long code = 0;
    for (int i = r; i-- > 0;) code = code * m + mod(v[i], m);
    return code;
  };
  std::vector<Perm> gens;
  for (int i = 0; i < r; ++i) {
    std::vector<Point> img(npts);
    for (long long x = 0; x < npts; ++x) {
      auto v = decode(x);
      v[i] = (v[i] + 1) % m;
      img[x] = static_cast<Point>(encode(v));
    }
    gens.emplace_back(img);
  }
  for (const auto& mat : matrices) {
    if (static_cast<int>(mat.size()) != r * r) throw InvalidArgument("affine_group: matrix size");
    std::vector<Point> img(npts);
    for (long long x = 0; x < npts; ++x) {
      auto v = decode(x);
      std::vector<int> w(r, 0);
      for (int a = 0; a < r; ++a) {
        long long acc = 0;
        for (int b = 0; b < r; ++b) acc += static_cast<long long>(mat[a * r + b]) * v[b];
        w[a] = mod(acc, m);
      }
      img[x] = static_cast<Point>(encode(w));
    }
    std::vector<Point> check = img;
    std::sort(check.begin(), check.end());
    for (long long x = 0; x < npts; ++x)
      if (check[x] != x) throw InvalidArgument("affine_group: matrix not invertible");
    gens.emplace_back(img);
  }
  return Group::generate(gens, or_default(std::move(name), "Aff"));
}

Group direct_product(const Group& a, const Group& b, std::string name) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const Perm& s : a.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = s[i];
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(img);
  }
  for (const Perm& s : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + s[i]);
    gens.emplace_back(img);
  }
  if (gens.empty()) gens.emplace_back(da + db);
  Group g = Group::generate(gens, or_default(std::move(name), a.name() + "x" + b.name()));
  require_order(g, a.order() * b.order(), "direct_product");
  return g;
}

namespace {

Perm unique_central_involution(const Group& g) {
  Group z = center(g);
  std::optional<Perm> found;
  for (const Perm& x : z.elements())
    if (x.order() == 2) {
      if (found) throw InvalidArgument("central_product: " + g.name() + " has several central involutions");
      found = x;
    }
  if (!found) throw InvalidArgument("central_product: " + g.name() + " has no central involution");
  return *found;
}

Perm shift_into(const Perm& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) img[offset + i] = static_cast<Point>(offset + p[i]);
  return Perm(img);
}

Group point_stabilizer(const Group& g, Point pt) {
  std::vector<Perm> keep;
  for (const Perm& x : g.elements())
    if (x[pt] == pt) keep.push_back(x);
  return Group::from_elements(g.degree(), keep);
}

}  // namespace

Group central_product(const Group& a, const Group& b, std::string name) {
  name = or_default(std::move(name), a.name() + "*" + b.name());
  Perm za = unique_central_involution(a), zb = unique_central_involution(b);
  Group ab = direct_product(a, b);
  const std::size_t deg = ab.degree();
  Perm z = shift_into(za, 0, deg) * shift_into(zb, a.degree(), deg);
  const std::size_t target = a.order() * b.order() / 2;
  // Cosets of <z> * (point stabilizers) give a smaller faithful action when
  // that subgroup has core <z>; otherwise fall back to the regular action.
  std::vector<Perm> kgens{z};
  Group sa = point_stabilizer(a, 0), sb = point_stabilizer(b, 0);
  for (const Perm& s : sa.generators()) kgens.push_back(shift_into(s, 0, deg));
  for (const Perm& s : sb.generators()) kgens.push_back(shift_into(s, a.degree(), deg));
  Group k = Group::generate(kgens);
  Group g = coset_action(ab, k, name);
  if (g.order() == target) return g;
  g = coset_action(ab, Group::generate({z}), name);
  require_order(g, target, "central_product");
  return g;
}

Group wreath_cyclic_c2(int m) {
  if (m < 1) throw InvalidArgument("wreath: bad parameter");
  std::vector<Point> cyc(2 * m), swap(2 * m);
  for (int i = 0; i < m; ++i) {
    cyc[i] = static_cast<Point>((i + 1) % m);
    cyc[m + i] = static_cast<Point>(m + i);
    swap[i] = static_cast<Point>(m + i);
    swap[m + i] = static_cast<Point>(i);
  }
  Group g = Group::generate({Perm(cyc), Perm(swap)}, "C" + std::to_string(m) + "wrC2");
  require_order(g, static_cast<std::size_t>(2 * m * m), "wreath");
  return g;
}

Group semidirect(const Group& base, const std::function<Perm(const Perm&)>& alpha, std::string name) {
  const std::size_t n = base.order();
  std::vector<Perm> gens;
  for (const Perm& h : base.generators()) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(*base.index_of(base.element(x) * h));
    gens.emplace_back(img);
  }
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto idx = base.index_of(alpha(base.element(x)));
    if (!idx) throw InvalidArgument("semidirect: alpha does not preserve the base group");
    img[x] = static_cast<Point>(*idx);
  }
  Perm a(img);
  for (const Perm& h : base.generators())
    for (const Perm& k : base.generators())
      if (alpha(h * k) != alpha(h) * alpha(k)) throw InvalidArgument("semidirect: alpha is not a homomorphism");
  gens.push_back(a);
  Group g = Group::generate(gens, or_default(std::move(name), base.name() + ":<alpha>"));
  std::size_t alpha_order = a.order();
  require_order(g, n * alpha_order, "semidirect");
  return g;
}

LinearAction::LinearAction(FiniteField field, std::vector<SemilinearMap> gens,
                           const std::vector<std::pair<int, int>>& start, bool projective, std::string name,
                           std::size_t max_order)
    : field_(std::move(field)), projective_(projective), group_(Group::trivial(1)) {
  const int q = field_.q();
  lookup_.assign(static_cast<std::size_t>(q) * q, -1);
  for (auto v : start) {
    v = normalize(v);
    if (index_of(v) >= 0) continue;
    lookup_[v.first * q + v.second] = static_cast<int>(points_.size());
    points_.push_back(v);
  }
  for (std::size_t pos = 0; pos < points_.size(); ++pos)
    for (const auto& g : gens) {
      auto w = apply(g, points_[pos]);
      if (index_of(w) >= 0) continue;
      lookup_[w.first * q + w.second] = static_cast<int>(points_.size());
      points_.push_back(w);
    }
  if (points_.size() > 65535) throw TooLarge("linear action: too many points");
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(perm_of(g));
  if (perms.empty()) perms.emplace_back(points_.size());
  group_ = Group::generate(perms, std::move(name), max_order);
}

std::pair<int, int> LinearAction::normalize(std::pair<int, int> v) const {
  if (!projective_) return v;
  if (v.second != 0) {
    int inv = field_.inv(v.second);
    return {field_.mul(v.first, inv), 1};
  }
  if (v.first == 0) throw InvalidArgument("projective point (0,0)");
  return {1, 0};
}

std::pair<int, int> LinearAction::apply(const SemilinearMap& m, std::pair<int, int> v) const {
  int x = v.first, y = v.second;
  for (int i = 0; i < m.frobenius_power; ++i) {
    x = field_.frobenius(x);
    y = field_.frobenius(y);
  }
  const Mat2& a = m.matrix;
  return normalize({field_.add(field_.mul(a.a, x), field_.mul(a.b, y)), field_.add(field_.mul(a.c, x), field_.mul(a.d, y))});
}

int LinearAction::index_of(std::pair<int, int> v) const { return lookup_[v.first * field_.q() + v.second]; }

Perm LinearAction::perm_of(const SemilinearMap& m) const {
  std::vector<Point> img(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    int j = index_of(apply(m, points_[i]));
    if (j < 0) throw InvalidArgument("linear action: map does not preserve the orbit");
    img[i] = static_cast<Point>(j);
  }
  return Perm(img);
}

Mat2 LinearAction::matrix_of(const Perm& p) const {
  if (projective_) throw InvalidArgument("matrix_of: projective action");
  int e1 = index_of({1, 0}), e2 = index_of({0, 1});
  if (e1 < 0 || e2 < 0) throw InvalidArgument("matrix_of: basis vectors not in the orbit");
  auto c1 = points_[p[e1]], c2 = points_[p[e2]];
  return Mat2{c1.first, c2.first, c1.second, c2.second};
}

std::vector<SemilinearMap> sl2_generators(const FiniteField& f) {
  std::vector<SemilinearMap> gens;
  int w = 1;
  for (int i = 0; i < f.degree(); ++i) {
    gens.push_back({Mat2{1, w, 0, 1}, 0});
    w = f.mul(w, f.primitive());
  }
  gens.push_back({Mat2{0, f.neg(1), 1, 0}, 0});
  return gens;
}

namespace {

std::vector<std::pair<int, int>> e1_start() { return {{1, 0}}; }

std::size_t sl2_order(int q) { return static_cast<std::size_t>(q) * (static_cast<std::size_t>(q) * q - 1); }

}  // namespace

Group gl2(int q) {
  FiniteField f(q);
  auto gens = sl2_generators(f);
  gens.push_back({Mat2{f.primitive(), 0, 0, 1}, 0});
  Group g = LinearAction(f, gens, e1_start(), false, "GL(2," + std::to_string(q) + ")").group();
  require_order(g, sl2_order(q) * (q - 1), "GL(2,q)");
  return g;
}

Group sl2(int q) {
  FiniteField f(q);
  Group g = LinearAction(f, sl2_generators(f), e1_start(), false, "SL(2," + std::to_string(q) + ")").group();
  require_order(g, sl2_order(q), "SL(2,q)");
  return g;
}

Group pgl2(int q) {
  FiniteField f(q);
  auto gens = sl2_generators(f);
  gens.push_back({Mat2{f.primitive(), 0, 0, 1}, 0});
  Group g = LinearAction(f, gens, e1_start(), true, "PGL(2," + std::to_string(q) + ")").group();
  require_order(g, sl2_order(q), "PGL(2,q)");
  return g;
}

Group psl2(int q) {
  FiniteField f(q);
  Group g = LinearAction(f, sl2_generators(f), e1_start(), true, "PSL(2," + std::to_string(q) + ")").group();
  require_order(g, sl2_order(q) / (q % 2 == 1 ? 2 : 1), "PSL(2,q)");
  return g;
}

}  // namespace fsind
