#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsind/perm.hpp"

namespace fsind {

namespace detail {
struct GroupData;
}

struct ConjClass {
  std::size_t index = 0;
  Perm representative;
  std::size_t size = 0;
  std::size_t centralizer_order = 0;
  std::size_t element_order = 0;
};

/// Finite permutation group with every element enumerated.
///
/// Groups are immutable values; copies share the element store. Conjugacy
/// classes and power maps are computed on first use (thread-safe).
/// Classes are ordered by element order, then class size, then the
/// lexicographically smallest element, so every derived table is
/// reproducible.
class Group {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 100000;

  static Group generate(std::vector<Perm> generators, std::string name = {},
                        std::size_t max_order = kDefaultMaxOrder);
  /// Subgroup spanned by the given elements (generators picked greedily).
  static Group from_elements(std::size_t degree, const std::vector<Perm>& elements,
                             std::string name = {});
  static Group trivial(std::size_t degree);

  const std::string& name() const;
  Group with_name(std::string name) const;

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Perm>& elements() const;
  const Perm& element(std::size_t idx) const { return elements()[idx]; }
  std::optional<std::size_t> index_of(const Perm& g) const;
  bool contains(const Perm& g) const { return index_of(g).has_value(); }
  std::size_t element_order(std::size_t idx) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  const std::vector<ConjClass>& classes() const;
  std::size_t num_classes() const { return classes().size(); }
  /// Throws NotMember when g is not in the group.
  std::size_t class_of(const Perm& g) const;
  std::size_t class_of_index(std::size_t idx) const;
  const std::vector<std::size_t>& class_members(std::size_t cls) const;
  /// Class of rep(cls)^k, any integer k.
  std::size_t power_class(std::size_t cls, long long k) const;
  std::size_t inverse_class(std::size_t cls) const { return power_class(cls, -1); }
  std::size_t square_class(std::size_t cls) const { return power_class(cls, 2); }

  bool is_subgroup_of(const Group& other) const;
  bool same_elements(const Group& other) const;

 private:
  explicit Group(std::shared_ptr<detail::GroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::GroupData> data_;
};

// Structure computations. All subgroups share the parent's degree.

Group centralizer(const Group& g, const Perm& x);
/// {h : x^h in {x, x^-1}}.
Group extended_centralizer(const Group& g, const Perm& x);
Group normalizer(const Group& g, const Group& h);
Group center(const Group& g);
Group normal_closure(const Group& g, const std::vector<Perm>& elements);
Group derived_subgroup(const Group& g);
Group intersection(const Group& a, const Group& b);
Group conjugate_subgroup(const Group& h, const Perm& by);
/// Elements of a not in b.
std::vector<Perm> set_difference(const Group& a, const Group& b);

/// Sylow 2-subgroup grown from `start` (a 2-subgroup of g) through 2-elements
/// of successive normalizers; result contains `start`.
Group sylow2(const Group& g);
Group sylow2_containing(const Group& g, const Group& start);

/// Some t in g with h^t = k, if any.
std::optional<Perm> conjugating_element(const Group& g, const Group& h, const Group& k);
bool is_conjugate_subgroup(const Group& g, const Group& h, const Group& k);
/// Whether h contains a g-conjugate of k.
bool contains_conjugate(const Group& g, const Group& h, const Group& k);
/// Some t in g with (d1,e1)^t = (d2,e2).
std::optional<Perm> conjugating_pair(const Group& g, const Group& d1, const Group& e1,
                                     const Group& d2, const Group& e2);

/// All subgroups of index 2 (kernels of surjections onto C2).
std::vector<Group> index2_subgroups(const Group& g);
/// Whether k is normal in g (k must be a subgroup).
bool is_normal(const Group& g, const Group& k);

/// Action of g on the right cosets of k; the image is g / core(k).
Group coset_action(const Group& g, const Group& k, std::string name = {});
/// Restriction of g to an invariant point set (orbit union), renumbered.
Group restrict_to_points(const Group& g, const std::vector<Point>& points, std::string name = {});

std::size_t nu2(std::size_t n);

}  // namespace fsind
