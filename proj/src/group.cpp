#include "fsind/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "fsind/errors.hpp"

namespace fsind {

namespace detail {

struct GroupData {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::size_t> orders;
  // BFS tree: elements[i] = elements[parent[i].first] * gens[parent[i].second]
  std::vector<std::pair<std::size_t, std::size_t>> parent;

  mutable std::once_flag classes_once;
  mutable std::vector<ConjClass> classes;
  mutable std::vector<std::size_t> class_of;
  mutable std::vector<std::vector<std::size_t>> members;
  mutable std::vector<std::vector<std::size_t>> power_map;

  void compute_classes() const;
};

void GroupData::compute_classes() const {
  const std::size_t n = elements.size();
  std::vector<std::size_t> raw(n, static_cast<std::size_t>(-1));
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> orbit{i};
    raw[i] = orbits.size();
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      const Perm& x = elements[orbit[pos]];
      for (const Perm& s : gens) {
        std::size_t j = index.at(x.conjugate_by(s));
        if (raw[j] == static_cast<std::size_t>(-1)) {
          raw[j] = orbits.size();
          orbit.push_back(j);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  struct Key {
    std::size_t order, size, rep;
  };
  std::vector<Key> keys;
  keys.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    std::size_t rep = *std::min_element(orbit.begin(), orbit.end(), [&](std::size_t a, std::size_t b) {
      return elements[a] < elements[b];
    });
    keys.push_back({orders[orbit.front()], orbit.size(), rep});
  }
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const Key& ka = keys[a];
    const Key& kb = keys[b];
    if (ka.order != kb.order) return ka.order < kb.order;
    if (ka.size != kb.size) return ka.size < kb.size;
    return elements[ka.rep] < elements[kb.rep];
  });
  std::vector<std::size_t> new_index(orbits.size());
  for (std::size_t c = 0; c < perm.size(); ++c) new_index[perm[c]] = c;

  classes.resize(orbits.size());
  members.resize(orbits.size());
  class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) class_of[i] = new_index[raw[i]];
  for (std::size_t c = 0; c < perm.size(); ++c) {
    const Key& k = keys[perm[c]];
    classes[c] = ConjClass{c, elements[k.rep], k.size, n / k.size, k.order};
    members[c] = orbits[perm[c]];
    std::sort(members[c].begin(), members[c].end());
  }

  power_map.resize(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Perm& rep = classes[c].representative;
    std::size_t ord = classes[c].element_order;
    power_map[c].resize(ord);
    Perm p(degree);
    for (std::size_t k = 0; k < ord; ++k) {
      power_map[c][k] = class_of[index.at(p)];
      p = p * rep;
    }
  }
}

}  // namespace detail

namespace {

std::size_t element_order_of(const Perm& p) { return p.order(); }

}  // namespace

Group Group::generate(std::vector<Perm> generators, std::string name, std::size_t max_order) {
  if (generators.empty()) throw InvalidArgument("empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");

  auto data = std::make_shared<detail::GroupData>();
  data->name = std::move(name);
  data->degree = degree;
  // Drop identities and duplicates; keep the first occurrence order.
  for (const Perm& g : generators) {
    if (g.is_identity()) continue;
    if (std::find(data->gens.begin(), data->gens.end(), g) != data->gens.end()) continue;
    data->gens.push_back(g);
  }
  Perm id(degree);
  data->elements.push_back(id);
  data->index.emplace(id, 0);
  data->parent.emplace_back(0, 0);
  for (std::size_t pos = 0; pos < data->elements.size(); ++pos) {
    for (std::size_t s = 0; s < data->gens.size(); ++s) {
      Perm y = data->elements[pos] * data->gens[s];
      if (data->index.find(y) != data->index.end()) continue;
      if (data->elements.size() >= max_order)
        throw TooLarge("group order exceeds enumeration bound " + std::to_string(max_order));
      data->index.emplace(y, data->elements.size());
      data->elements.push_back(std::move(y));
      data->parent.emplace_back(pos, s);
    }
  }
  data->orders.reserve(data->elements.size());
  for (const Perm& e : data->elements) data->orders.push_back(element_order_of(e));
  return Group(std::move(data));
}

Group Group::from_elements(std::size_t degree, const std::vector<Perm>& elements, std::string name) {
  std::vector<Perm> gens;
  Group current = trivial(degree);
  for (const Perm& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = generate(gens);
  }
  if (!name.empty()) current = current.with_name(std::move(name));
  return current;
}

Group Group::trivial(std::size_t degree) { return generate({Perm(degree)}); }

const std::string& Group::name() const { return data_->name; }

Group Group::with_name(std::string name) const {
  auto copy = std::make_shared<detail::GroupData>();
  copy->name = std::move(name);
  copy->degree = data_->degree;
  copy->gens = data_->gens;
  copy->elements = data_->elements;
  copy->index = data_->index;
  copy->orders = data_->orders;
  copy->parent = data_->parent;
  return Group(std::move(copy));
}

std::size_t Group::degree() const { return data_->degree; }
std::size_t Group::order() const { return data_->elements.size(); }
const std::vector<Perm>& Group::generators() const { return data_->gens; }
const std::vector<Perm>& Group::elements() const { return data_->elements; }

std::optional<std::size_t> Group::index_of(const Perm& g) const {
  if (g.degree() != data_->degree) return std::nullopt;
  auto it = data_->index.find(g);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::element_order(std::size_t idx) const { return data_->orders[idx]; }

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (std::size_t o : data_->orders) e = std::lcm(e, o);
  return e;
}

bool Group::is_abelian() const {
  const auto& g = data_->gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  return true;
}

const std::vector<ConjClass>& Group::classes() const {
  std::call_once(data_->classes_once, [this] { data_->compute_classes(); });
  return data_->classes;
}

std::size_t Group::class_of(const Perm& g) const {
  auto idx = index_of(g);
  if (!idx) throw NotMember("element " + g.to_cycle_string() + " is not in the group");
  return class_of_index(*idx);
}

std::size_t Group::class_of_index(std::size_t idx) const {
  classes();
  return data_->class_of[idx];
}

const std::vector<std::size_t>& Group::class_members(std::size_t cls) const {
  classes();
  return data_->members[cls];
}

std::size_t Group::power_class(std::size_t cls, long long k) const {
  classes();
  const auto& pm = data_->power_map[cls];
  long long ord = static_cast<long long>(pm.size());
  long long r = ((k % ord) + ord) % ord;
  return pm[static_cast<std::size_t>(r)];
}

bool Group::is_subgroup_of(const Group& other) const {
  if (other.degree() != degree() || other.order() % order() != 0) return false;
  for (const Perm& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool Group::same_elements(const Group& other) const {
  return other.order() == order() && is_subgroup_of(other);
}

namespace {

Group filter(const Group& g, auto&& pred) {
  std::vector<Perm> keep;
  for (const Perm& e : g.elements())
    if (pred(e)) keep.push_back(e);
  return Group::from_elements(g.degree(), keep);
}

bool normalizes(const Perm& x, const Group& h) {
  for (const Perm& s : h.generators())
    if (!h.contains(s.conjugate_by(x))) return false;
  return true;
}

bool is_two_power(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

std::size_t nu2(std::size_t n) {
  if (n == 0) throw InvalidArgument("nu2(0)");
  std::size_t v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

Group centralizer(const Group& g, const Perm& x) {
  if (!g.contains(x)) throw NotMember("centralizer: element not in group");
  return filter(g, [&](const Perm& h) { return h * x == x * h; });
}

Group extended_centralizer(const Group& g, const Perm& x) {
  if (!g.contains(x)) throw NotMember("extended_centralizer: element not in group");
  Perm xinv = x.inverse();
  return filter(g, [&](const Perm& h) {
    Perm c = x.conjugate_by(h);
    return c == x || c == xinv;
  });
}

Group normalizer(const Group& g, const Group& h) {
  if (!h.is_subgroup_of(g)) throw NotMember("normalizer: not a subgroup");
  return filter(g, [&](const Perm& x) { return normalizes(x, h); });
}

Group center(const Group& g) {
  return filter(g, [&](const Perm& x) {
    for (const Perm& s : g.generators())
      if (x * s != s * x) return false;
    return true;
  });
}

Group normal_closure(const Group& g, const std::vector<Perm>& elements) {
  std::vector<Perm> gens = elements;
  gens.push_back(Perm(g.degree()));
  Group n = Group::generate(gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& a : std::vector<Perm>(n.generators())) {
      for (const Perm& s : g.generators()) {
        Perm c = a.conjugate_by(s);
        if (!n.contains(c)) {
          gens.push_back(c);
          n = Group::generate(gens);
          changed = true;
        }
      }
    }
  }
  return n;
}

Group derived_subgroup(const Group& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, comms);
}

Group intersection(const Group& a, const Group& b) {
  return filter(a, [&](const Perm& x) { return b.contains(x); });
}

Group conjugate_subgroup(const Group& h, const Perm& by) {
  std::vector<Perm> gens;
  for (const Perm& s : h.generators()) gens.push_back(s.conjugate_by(by));
  gens.push_back(Perm(h.degree()));
  return Group::generate(gens);
}

std::vector<Perm> set_difference(const Group& a, const Group& b) {
  std::vector<Perm> out;
  for (const Perm& x : a.elements())
    if (!b.contains(x)) out.push_back(x);
  return out;
}

Group sylow2_containing(const Group& g, const Group& start) {
  const std::size_t target = std::size_t{1} << nu2(g.order());
  if (!is_two_power(start.order())) throw InvalidArgument("sylow2: start is not a 2-group");
  Group p = start;
  while (p.order() < target) {
    bool grown = false;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (!is_two_power(g.element_order(i))) continue;
      const Perm& x = g.element(i);
      if (p.contains(x) || !normalizes(x, p)) continue;
      std::vector<Perm> gens = p.generators();
      gens.push_back(x);
      p = Group::generate(gens);
      grown = true;
      break;
    }
    if (!grown) throw Corruption("sylow2: no 2-element in N(P) \\ P");
  }
  return p;
}

Group sylow2(const Group& g) { return sylow2_containing(g, Group::trivial(g.degree())); }

std::optional<Perm> conjugating_element(const Group& g, const Group& h, const Group& k) {
  if (h.order() != k.order()) return std::nullopt;
  for (const Perm& t : g.elements()) {
    bool ok = true;
    for (const Perm& s : h.generators())
      if (!k.contains(s.conjugate_by(t))) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

bool is_conjugate_subgroup(const Group& g, const Group& h, const Group& k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw NotMember("not subgroups of G");
  return conjugating_element(g, h, k).has_value();
}

bool contains_conjugate(const Group& g, const Group& h, const Group& k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw NotMember("not subgroups of G");
  if (h.order() % k.order() != 0) return false;
  for (const Perm& t : g.elements()) {
    bool ok = true;
    for (const Perm& s : k.generators())
      if (!h.contains(s.conjugate_by(t))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::optional<Perm> conjugating_pair(const Group& g, const Group& d1, const Group& e1,
                                     const Group& d2, const Group& e2) {
  if (d1.order() != d2.order() || e1.order() != e2.order()) return std::nullopt;
  for (const Perm& t : g.elements()) {
    auto maps = [&](const Group& a, const Group& b) {
      for (const Perm& s : a.generators())
        if (!b.contains(s.conjugate_by(t))) return false;
      return true;
    };
    if (maps(d1, d2) && maps(e1, e2)) return t;
  }
  return std::nullopt;
}

std::vector<Group> index2_subgroups(const Group& g) {
  const auto& gens = g.generators();
  if (gens.size() > 16) throw TooLarge("index2_subgroups: too many generators");
  std::vector<Group> result;
  // Rebuild the BFS words from the generator list to evaluate candidate signs.
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n, 0), via(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    std::size_t i = queue[pos];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t j = *g.index_of(g.element(i) * gens[s]);
      if (seen[j]) continue;
      seen[j] = true;
      parent[j] = i;
      via[j] = s;
      queue.push_back(j);
    }
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<int> sign(n, 0);
    for (std::size_t pos = 1; pos < queue.size(); ++pos) {
      std::size_t j = queue[pos];
      sign[j] = sign[parent[j]] ^ static_cast<int>((mask >> via[j]) & 1U);
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        std::size_t j = *g.index_of(g.element(i) * gens[s]);
        if (sign[j] != (sign[i] ^ static_cast<int>((mask >> s) & 1U))) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    std::vector<Perm> kernel;
    for (std::size_t i = 0; i < n; ++i)
      if (sign[i] == 0) kernel.push_back(g.element(i));
    Group k = Group::from_elements(g.degree(), kernel);
    bool dup = false;
    for (const Group& r : result)
      if (r.same_elements(k)) dup = true;
    if (!dup) result.push_back(std::move(k));
  }
  return result;
}

bool is_normal(const Group& g, const Group& k) {
  for (const Perm& s : g.generators())
    if (!normalizes(s, k)) return false;
  return true;
}

Group coset_action(const Group& g, const Group& k, std::string name) {
  if (!k.is_subgroup_of(g)) throw NotMember("coset_action: not a subgroup");
  const std::size_t n = g.order();
  std::vector<std::size_t> coset(n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (coset[i] != static_cast<std::size_t>(-1)) continue;
    for (const Perm& x : k.elements()) coset[*g.index_of(x * g.element(i))] = reps.size();
    reps.push_back(i);
  }
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(coset[*g.index_of(g.element(reps[c]) * s)]);
    gens.emplace_back(std::move(images));
  }
  if (gens.empty()) gens.emplace_back(reps.size());
  return Group::generate(gens, std::move(name));
}

Group restrict_to_points(const Group& g, const std::vector<Point>& points, std::string name) {
  std::vector<int> pos(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      int j = pos[s[points[i]]];
      if (j < 0) throw InvalidArgument("restrict_to_points: point set not invariant");
      images[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(images));
  }
  if (gens.empty()) gens.emplace_back(points.size());
  return Group::generate(gens, std::move(name));
}

}  // namespace fsind
