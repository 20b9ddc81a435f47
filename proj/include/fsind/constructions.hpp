#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsind/blocks.hpp"
#include "fsind/chartab.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// A constructed example group together with the information needed to find
/// the block of interest inside it.
struct Example {
  Group group;
  /// Index-2 subgroup remembered through the construction (e.g. H in
  /// H x C2), used when this example is the Hhat argument of FR.
  std::optional<Group> base;
  /// The designated block contains this irreducible character; the
  /// principal block is designated when absent.
  std::optional<ClassFunction> marker;
  /// Predicted defect pair up to isomorphism (Sylow2(H), Sylow2(Hhat)).
  std::optional<std::pair<Group, Group>> predicted_pair;
};

/// Index of the designated block of `ex` among `blocks` of its table.
std::size_t designated_block(const Example& ex, const CharacterTable& t, const std::vector<BlockData>& blocks);

/// Extends every permutation of g by `extra` fixed points.
Group pad_degree(const Group& g, std::size_t extra);

/// G = {(h, s) in Hhat x S3 : h not in H iff s odd}, on deg(Hhat)+3 points.
/// The marker is (1_{H x C3} (x) theta)^G, asserted irreducible.
Example fong_reynolds(const Group& h, const Group& hhat);

/// Finds H inside Hhat: uses the tracked base when it is isomorphic to h,
/// otherwise searches the index-2 subgroups of Hhat for one isomorphic to h.
Group locate_index2(const Group& h, const Example& hhat);

/// SL(2,q) < diag(zeta, zeta^-1) > inside SL(2,q^2), zeta of order 2(q-1);
/// q an odd prime. Base is SL(2,q) in the same action.
Example sl2_q_extension(int q);
/// SL(2,q) : <alpha>, alpha conjugation by (0 c; 1 0) with -c a non-square;
/// q in {3, 5, 7}. Base is SL(2,q).
Example sl2_sd_extension(int q);
/// The index-2 subgroup of PGammaL(2,q) (q = p^2) other than PGL(2,q) and
/// PSL(2,q):<sigma>, on the projective line. Base is PSL(2,q).
Example pgl_star(int q);
/// PSL(2,q) : <sigma> for q = p^2, on the projective line. Base is PSL(2,q).
Example semilinear_psl(int q);
/// PGL(2,q) on the projective line with base PSL(2,q).
Example pgl_with_base(int q);

/// C4^2 : <A> with A = (0 -1; 1 -1) of order 3, affine on 16 points.
Group homocyclic_h();
/// C4^2 : S3 (A and the coordinate swap), containing homocyclic_h() literally.
Group homocyclic_s3();

}  // namespace fsind
