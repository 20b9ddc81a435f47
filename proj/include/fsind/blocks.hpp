#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsind/chartab.hpp"
#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// A 2-block of G, described through its irreducible characters.
struct BlockData {
  std::size_t index = 0;
  std::vector<std::size_t> chars;   // ascending character indices
  std::vector<F2kElement> lambda;   // central character reduction per class
  int defect = 0;
  std::vector<int> heights;         // parallel to chars
  bool principal = false;
  bool real = false;
  int l = 0;

  std::size_t k() const { return chars.size(); }
  bool contains(std::size_t chi) const;
  int height_of(std::size_t chi) const;
};

/// Defect group D and, for real blocks, extended defect group E >= D.
struct DefectPair {
  Group D;
  Group E;
  std::size_t defect_class = 0;  // class whose centralizer produced (D, E)
};

/// omega_chi(K) = |K| chi(x_K) / chi(1), asserted integral.
CyclotomicNumber central_character(const CharacterTable& t, std::size_t chi, std::size_t cls);

/// Blocks in order of their smallest character; block 0 is principal.
/// The reduction must be set up for a conductor divisible by the exponent.
std::vector<BlockData> block_partition(const CharacterTable& t, const Mod2Reduction& red);
std::vector<BlockData> block_partition(const CharacterTable& t);

/// Exact rank of (chi(u)) over chi in B and odd-order classes u.
int little_l(const CharacterTable& t, const std::vector<std::size_t>& chars);

/// 2-regular classes K with lambda_B(K) != 0 and nonzero idempotent
/// coefficient a_B(K); nu_2|C_G(x_K)| = d(B) is asserted for each.
std::vector<std::size_t> defect_classes(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red);

Group defect_group(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red);

/// Real blocks only. D is literally contained in E; all real defect classes
/// must give conjugate pairs, and |E:D| = 1 exactly for the principal block.
DefectPair extended_defect_group(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red);

/// lambda_b^G(K) = sum of lambda_b(L) over H-classes L in K; the G-block
/// with that lambda vector, if any. `red` must be the reduction used for
/// the G-blocks.
std::optional<std::size_t> brauer_correspondent(const CharacterTable& tg, const std::vector<BlockData>& gblocks,
                                                const CharacterTable& th, const BlockData& b,
                                                const Mod2Reduction& red);

/// Everything the block report needs about one block.
struct BlockSummary {
  BlockData block;
  std::optional<DefectPair> pair;  // D always; E meaningful when real
  std::string d_type, e_type;
  std::vector<int> eps;            // parallel to block.chars
};

/// Catalog label of a 2-group of order <= 64, "order N" beyond.
std::string type_label(const Group& p);
BlockSummary summarize_block(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red);
std::vector<BlockSummary> analyze_blocks(const CharacterTable& t);
nlohmann::json block_report_json(const std::string& groupspec, const std::vector<BlockSummary>& blocks);

}  // namespace fsind
