#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fsind {

using Point = std::uint16_t;

/// Permutation of {0, ..., degree-1} stored as its image list.
///
/// Products act on the right: (p * q)(i) = q(p(i)), so p is applied first.
/// Conjugation follows the same convention, g^h = h^-1 g h.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long long k) const;
  Perm conjugate_by(const Perm& h) const;  // h^-1 * this * h

  bool is_identity() const;
  std::size_t order() const;

  std::string to_cycle_string() const;

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm& rhs) const {
    return images_ <=> rhs.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace fsind
