#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <string>
#include <vector>

#include "fsind/finite_field.hpp"
#include "fsind/group.hpp"

namespace fsind {

// Permutation realizations of the standard families.
//
// 2-groups without a small faithful action are built as regular
// representations of an explicit normal form; matrix groups act on
// vectors or on the projective line.

Group cyclic(int n);
/// Dihedral group of order n (n >= 4, even), acting on n/2 points.
Group dihedral(int n);
/// Generalized quaternion group of order n = 2^k >= 8.
Group quaternion(int n);
/// Semidihedral group of order n = 2^k >= 16.
Group semidihedral(int n);
/// Modular group M_n = C_{n/2} : C2 with a -> a^{1+n/4}, n >= 16.
Group modular(int n);
Group symmetric(int n);
Group alternating(int n);

/// Regular representation of the split or non-split cyclic extension
/// <a, b | a^m, b^k = a^t, b a b^-1 = a^s>.
Group metacyclic(int m, int k, int s, int t, std::string name = {});

/// Regular representation of a cyclic extension of the abelian group
/// A = Z/moduli[0] x ... by <b>: b acts on A by the integer matrix `action`
/// (row-major, acting on column vectors) and b^k = tail in A.
Group abelian_extension(const std::vector<int>& moduli, const std::vector<int>& action, int k,
                        const std::vector<int>& tail, std::string name = {});

/// (Z/m)^r : <matrices> acting affinely on m^r points. Each matrix is
/// r*r integers, row-major.
Group affine_group(int m, int r, const std::vector<std::vector<int>>& matrices,
                   std::string name = {});

Group direct_product(const Group& a, const Group& b, std::string name = {});
/// (A x B) / <(z_A, z_B)> for the unique central involutions z_A, z_B.
Group central_product(const Group& a, const Group& b, std::string name = {});
/// C_m wr C2 on 2m points.
Group wreath_cyclic_c2(int m);
/// base : <alpha> for an automorphism alpha of base, acting on the elements
/// of base (x -> x h for h in base, x -> alpha(x) for the extra generator).
/// alpha is evaluated on every element of base and must be an automorphism.
Group semidirect(const Group& base, const std::function<Perm(const Perm&)>& alpha,
                 std::string name = {});

/// Group generated by semilinear maps on F_q^2, acting on the orbit of the
/// start vectors (nonzero vectors, or projective points when projective).
class LinearAction {
 public:
  LinearAction(FiniteField field, std::vector<SemilinearMap> gens,
               const std::vector<std::pair<int, int>>& start, bool projective,
               std::string name = {}, std::size_t max_order = Group::kDefaultMaxOrder);

  const Group& group() const { return group_; }
  const FiniteField& field() const { return field_; }
  const std::vector<std::pair<int, int>>& points() const { return points_; }
  /// Permutation induced by a semilinear map (which must preserve the orbit).
  Perm perm_of(const SemilinearMap& m) const;
  /// Matrix of a linear group element; needs the non-projective action
  /// with (1,0) and (0,1) in the orbit.
  Mat2 matrix_of(const Perm& p) const;

 private:
  std::pair<int, int> apply(const SemilinearMap& m, std::pair<int, int> v) const;
  std::pair<int, int> normalize(std::pair<int, int> v) const;
  int index_of(std::pair<int, int> v) const;

  FiniteField field_;
  bool projective_;
  std::vector<std::pair<int, int>> points_;
  std::vector<int> lookup_;
  Group group_;
};

/// Standard generators of SL(2, q).
std::vector<SemilinearMap> sl2_generators(const FiniteField& f);

Group gl2(int q);
Group sl2(int q);
Group pgl2(int q);
Group psl2(int q);

}  // namespace fsind
