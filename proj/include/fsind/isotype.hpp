#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsind/group.hpp"

namespace fsind {

/// Isomorphism invariants used to prune the catalog search.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> abelianization;  // elementary divisors, ascending
  std::map<std::size_t, std::size_t> order_histogram;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

struct IsoType {
  std::string label;
  Fingerprint fingerprint;
  /// False when no catalog group matched and the label is fingerprint-only.
  bool identified = false;
};

Fingerprint fingerprint(const Group& g);

/// Elementary divisors of G/G' (prime powers, ascending).
std::vector<std::size_t> abelian_invariants(const Group& g);

/// Backtracking over generator images; groups of order <= 256.
bool are_isomorphic(const Group& a, const Group& b);

/// Label for a 2-group of order <= 64. Abelian groups are labelled by their
/// invariants ("C4xC4"); others by catalog lookup, with `extra` entries
/// (label, group) consulted after the built-in catalog.
IsoType iso_type_2group(const Group& p, const std::vector<std::pair<std::string, Group>>& extra = {});

}  // namespace fsind
