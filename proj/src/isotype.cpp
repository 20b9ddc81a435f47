#include "fsind/isotype.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "fsind/errors.hpp"
#include "fsind/factory.hpp"

namespace fsind {

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << ";exp=" << exponent << ";Z=" << center_order << ";G'=" << derived_order << ";ab=[";
  for (std::size_t i = 0; i < abelianization.size(); ++i) os << (i ? "," : "") << abelianization[i];
  os << "];hist=[";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> abelian_invariants(const Group& g) {
  Group d = derived_subgroup(g);
  std::size_t quotient = g.order() / d.order();
  std::vector<std::size_t> result;
  std::size_t rest = quotient;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::size_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    // counts[j] = #{cosets xG' : x^(p^j) in G'}
    std::vector<std::size_t> counts{1};
    std::size_t pj = 1;
    while (counts.back() < pk) {
      pj *= p;
      std::size_t c = 0;
      for (const Perm& x : g.elements())
        if (d.contains(x.pow(static_cast<long long>(pj)))) ++c;
      counts.push_back(c / d.order());
    }
    // Number of cyclic factors of order >= p^j is log_p(counts[j] / counts[j-1]).
    std::vector<std::size_t> at_least(counts.size(), 0);
    for (std::size_t j = 1; j < counts.size(); ++j) {
      std::size_t ratio = counts[j] / counts[j - 1];
      std::size_t e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least[j] = e;
    }
    std::size_t q = 1;
    for (std::size_t j = 1; j < at_least.size(); ++j) {
      q *= p;
      std::size_t exactly = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
      for (std::size_t t = 0; t < exactly; ++t) result.push_back(q);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order();
  f.exponent = g.exponent();
  f.center_order = center(g).order();
  f.derived_order = derived_subgroup(g).order();
  f.abelianization = abelian_invariants(g);
  for (std::size_t i = 0; i < g.order(); ++i) ++f.order_histogram[g.element_order(i)];
  return f;
}

namespace {

struct Cayley {
  std::size_t n;
  std::vector<std::uint16_t> table;  // table[i*n+j] = index(e_i * e_j)
  std::vector<std::size_t> orders, class_sizes;

  explicit Cayley(const Group& g) : n(g.order()), table(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table[i * n + j] = static_cast<std::uint16_t>(*g.index_of(g.element(i) * g.element(j)));
    for (std::size_t i = 0; i < n; ++i) {
      orders.push_back(g.element_order(i));
      class_sizes.push_back(g.classes()[g.class_of_index(i)].size);
    }
  }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * n + b]; }
};

// Greedy generating sequence: repeatedly add an element of maximal order
// outside the current subgroup.
std::vector<std::size_t> small_generating_set(const Cayley& c) {
  std::vector<bool> inside(c.n, false);
  inside[0] = true;
  std::vector<std::size_t> members{0}, gens;
  while (members.size() < c.n) {
    std::size_t best = c.n;
    for (std::size_t i = 0; i < c.n; ++i)
      if (!inside[i] && (best == c.n || c.orders[i] > c.orders[best])) best = i;
    gens.push_back(best);
    // Close under right multiplication by all generators.
    members.assign(1, 0);
    std::fill(inside.begin(), inside.end(), false);
    inside[0] = true;
    for (std::size_t pos = 0; pos < members.size(); ++pos)
      for (std::size_t s : gens) {
        std::size_t y = c.mul(members[pos], s);
        if (!inside[y]) {
          inside[y] = true;
          members.push_back(y);
        }
      }
  }
  return gens;
}

}  // namespace

bool are_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 256) throw InvalidArgument("are_isomorphic: order above 256 unsupported");
  if (!(fingerprint(a) == fingerprint(b))) return false;
  Cayley ca(a), cb(b);
  const std::size_t n = ca.n;
  if (n == 1) return true;
  std::vector<std::size_t> gens = small_generating_set(ca);

  // Extends phi on <gens[0..k]> by closing under right multiplication;
  // false on a conflict or a non-injective assignment.
  auto close = [&](std::vector<int>& phi, std::vector<bool>& used, std::size_t k) {
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
      if (phi[i] >= 0) queue.push_back(i);
    for (std::size_t pos = 0; pos < queue.size(); ++pos) {
      std::size_t x = queue[pos];
      for (std::size_t j = 0; j <= k; ++j) {
        std::size_t y = ca.mul(x, gens[j]);
        std::size_t img = cb.mul(static_cast<std::size_t>(phi[x]), static_cast<std::size_t>(phi[gens[j]]));
        if (phi[y] >= 0) {
          if (static_cast<std::size_t>(phi[y]) != img) return false;
          continue;
        }
        if (used[img]) return false;
        phi[y] = static_cast<int>(img);
        used[img] = true;
        queue.push_back(y);
      }
    }
    return true;
  };

  std::function<bool(std::size_t, const std::vector<int>&, const std::vector<bool>&)> search =
      [&](std::size_t k, const std::vector<int>& phi, const std::vector<bool>& used) {
        if (k == gens.size()) return true;
        const std::size_t g = gens[k];
        for (std::size_t cand = 1; cand < n; ++cand) {
          if (used[cand] || cb.orders[cand] != ca.orders[g] || cb.class_sizes[cand] != ca.class_sizes[g]) continue;
          std::vector<int> next = phi;
          std::vector<bool> next_used = used;
          next[g] = static_cast<int>(cand);
          next_used[cand] = true;
          if (!close(next, next_used, k)) continue;
          if (search(k + 1, next, next_used)) return true;
        }
        return false;
      };
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  phi[0] = 0;
  used[0] = true;
  return search(0, phi, used);
}

namespace {

struct CatalogEntry {
  std::string label;
  Group group;
  Fingerprint fp;
};

const std::vector<CatalogEntry>& catalog() {
  static std::once_flag once;
  static std::vector<CatalogEntry> entries;
  std::call_once(once, [] {
    auto add = [](std::string label, Group g) {
      Fingerprint fp = fingerprint(g);
      entries.push_back({std::move(label), std::move(g), std::move(fp)});
    };
    Group c2 = cyclic(2), c4 = cyclic(4);
    for (int n : {8, 16, 32, 64}) {
      add("D" + std::to_string(n), dihedral(n));
      add("Q" + std::to_string(n), quaternion(n));
      if (n >= 16) {
        add("SD" + std::to_string(n), semidihedral(n));
        add("M" + std::to_string(n), modular(n));
      }
    }
    add("D8xC2", direct_product(dihedral(8), c2));
    add("Q8xC2", direct_product(quaternion(8), c2));
    add("D8*C4", central_product(dihedral(8), c4));
    add("C4:C4", metacyclic(4, 4, 3, 0));
    add("C2^2:C4", abelian_extension({2, 2}, {0, 1, 1, 0}, 4, {0, 0}));
    add("D16xC2", direct_product(dihedral(16), c2));
    add("Q16xC2", direct_product(quaternion(16), c2));
    add("SD16xC2", direct_product(semidihedral(16), c2));
    add("D8xC4", direct_product(dihedral(8), c4));
    add("Q8xC4", direct_product(quaternion(8), c4));
    add("D8xC2xC2", direct_product(direct_product(dihedral(8), c2), c2));
    add("D16*C4", central_product(dihedral(16), c4));
    add("C4wrC2", wreath_cyclic_c2(4));
    add("C8:C2^2", affine_group(8, 1, {{3}, {5}}));
    add("C8:C4", metacyclic(8, 4, 5, 0));
    add("C4:C8", metacyclic(4, 8, 3, 0));
    add("C4:Q8", abelian_extension({4, 4}, {3, 0, 0, 3}, 2, {2, 0}));
    add("D32xC2", direct_product(dihedral(32), c2));
    add("D32*C4", central_product(dihedral(32), c4));
  });
  return entries;
}

std::string abelian_label(const Group& p) {
  std::vector<std::size_t> inv = abelian_invariants(p);
  if (inv.empty()) return "C1";
  std::string label;
  for (std::size_t i = inv.size(); i-- > 0;) label += (label.empty() ? "C" : "xC") + std::to_string(inv[i]);
  return label;
}

}  // namespace

IsoType iso_type_2group(const Group& p, const std::vector<std::pair<std::string, Group>>& extra) {
  const std::size_t n = p.order();
  if ((n & (n - 1)) != 0) throw InvalidArgument("iso_type_2group: not a 2-group");
  if (n > 64) throw InvalidArgument("iso_type_2group: order above 64 unsupported");
  IsoType t;
  t.fingerprint = fingerprint(p);
  if (p.is_abelian()) {
    t.label = abelian_label(p);
    t.identified = true;
    return t;
  }
  for (const CatalogEntry& e : catalog()) {
    if (!(e.fp == t.fingerprint)) continue;
    if (are_isomorphic(p, e.group)) {
      t.label = e.label;
      t.identified = true;
      return t;
    }
  }
  for (const auto& [label, g] : extra) {
    if (g.order() != n) continue;
    if (are_isomorphic(p, g)) {
      t.label = label;
      t.identified = true;
      return t;
    }
  }
  t.label = "fp:" + t.fingerprint.to_string();
  return t;
}

}  // namespace fsind
