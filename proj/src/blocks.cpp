#include "fsind/blocks.hpp"

#include <algorithm>
#include <map>

#include "fsind/errors.hpp"
#include "fsind/isotype.hpp"

namespace fsind {

bool BlockData::contains(std::size_t chi) const { return std::binary_search(chars.begin(), chars.end(), chi); }

int BlockData::height_of(std::size_t chi) const {
  auto it = std::lower_bound(chars.begin(), chars.end(), chi);
  if (it == chars.end() || *it != chi) throw InvalidArgument("height_of: character not in block");
  return heights[static_cast<std::size_t>(it - chars.begin())];
}

CyclotomicNumber central_character(const CharacterTable& t, std::size_t chi, std::size_t cls) {
  const auto& c = t.group().classes()[cls];
  CyclotomicNumber w =
      t.character(chi)[cls].scaled(mpq_class(static_cast<long>(c.size), static_cast<long>(t.degree(chi))));
  if (!w.is_integral())
    throw Corruption("central character value is not an algebraic integer: " + w.to_string());
  return w;
}

std::vector<BlockData> block_partition(const CharacterTable& t, const Mod2Reduction& red) {
  const Group& g = t.group();
  const std::size_t k = t.num_classes();
  std::map<std::vector<F2kElement>, std::size_t> index;
  std::vector<BlockData> blocks;
  for (std::size_t chi = 0; chi < t.num_chars(); ++chi) {
    std::vector<F2kElement> lam(k);
    for (std::size_t l = 0; l < k; ++l) lam[l] = red.reduce(central_character(t, chi, l));
    auto it = index.find(lam);
    if (it == index.end()) {
      it = index.emplace(lam, blocks.size()).first;
      BlockData b;
      b.index = blocks.size();
      b.lambda = lam;
      blocks.push_back(std::move(b));
    }
    blocks[it->second].chars.push_back(chi);
  }
  const std::size_t n2 = nu2(g.order());
  for (BlockData& b : blocks) {
    std::size_t min_nu = n2;
    for (std::size_t chi : b.chars) min_nu = std::min(min_nu, nu2(static_cast<std::size_t>(t.degree(chi))));
    b.defect = static_cast<int>(n2 - min_nu);
    for (std::size_t chi : b.chars)
      b.heights.push_back(static_cast<int>(nu2(static_cast<std::size_t>(t.degree(chi))) - min_nu));
    b.principal = b.contains(0);
    b.real = true;
    for (std::size_t chi : b.chars)
      if (!b.contains(t.conjugate_char(chi))) b.real = false;
    b.l = little_l(t, b.chars);
  }
  return blocks;
}

std::vector<BlockData> block_partition(const CharacterTable& t) {
  return block_partition(t, Mod2Reduction(static_cast<int>(t.exponent())));
}

int little_l(const CharacterTable& t, const std::vector<std::size_t>& chars) {
  // The weighted Gram matrix over odd classes is rational (odd classes are
  // closed under Galois conjugation) and has the same rank as the
  // restriction matrix itself.
  const Group& g = t.group();
  const std::size_t n = chars.size();
  std::vector<std::vector<mpq_class>> gram(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      CyclotomicNumber v = inner_product_odd(g, t.character(chars[i]), t.character(chars[j]));
      if (!v.is_rational()) throw Corruption("2-regular inner product is irrational");
      gram[i][j] = gram[j][i] = v.to_rational();
    }
  int rank = 0;
  for (std::size_t col = 0; col < n && static_cast<std::size_t>(rank) < n; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < n && gram[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(gram[piv], gram[static_cast<std::size_t>(rank)]);
    const auto& prow = gram[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < n; ++r) {
      if (gram[r][col] == 0) continue;
      mpq_class f = gram[r][col] / prow[col];
      for (std::size_t c = col; c < n; ++c) gram[r][c] -= f * prow[c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> defect_classes(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red) {
  const Group& g = t.group();
  const auto& cls = g.classes();
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < cls.size(); ++l) {
    if (cls[l].element_order % 2 == 0 || b.lambda[l].is_zero()) continue;
    // a_B(K) = (1/|G|) sum_{chi in B} chi(1) chi(x_K^-1)
    const std::size_t linv = g.inverse_class(l);
    CyclotomicNumber s;
    for (std::size_t chi : b.chars) s += t.character(chi)[linv] * CyclotomicNumber(t.degree(chi));
    s = s.scaled(mpq_class(1, static_cast<unsigned long>(g.order())));
    if (red.reduce(s).is_zero()) continue;
    if (static_cast<int>(nu2(cls[l].centralizer_order)) != b.defect)
      throw TheoryViolation("defect class " + std::to_string(l) + " has the wrong centralizer 2-part");
    out.push_back(l);
  }
  if (out.empty()) throw TheoryViolation("block " + std::to_string(b.index) + " has no defect class");
  return out;
}

Group defect_group(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red) {
  const Group& g = t.group();
  auto dc = defect_classes(t, b, red);
  Group d = sylow2(centralizer(g, g.classes()[dc[0]].representative));
  for (std::size_t i = 1; i < dc.size(); ++i) {
    Group other = sylow2(centralizer(g, g.classes()[dc[i]].representative));
    if (!is_conjugate_subgroup(g, d, other))
      throw TheoryViolation("defect classes give non-conjugate defect groups");
  }
  return d;
}

DefectPair extended_defect_group(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red) {
  if (!b.real) throw InvalidArgument("extended_defect_group: block is not real");
  const Group& g = t.group();
  const auto& cls = g.classes();
  auto dc = defect_classes(t, b, red);
  Group d0 = sylow2(centralizer(g, cls[dc[0]].representative));
  std::vector<DefectPair> candidates;
  for (std::size_t l : dc) {
    if (g.inverse_class(l) != l) continue;
    const Perm& x = cls[l].representative;
    Group d = sylow2(centralizer(g, x));
    Group e = sylow2_containing(extended_centralizer(g, x), d);
    candidates.push_back(DefectPair{d, e, l});
  }
  if (candidates.empty())
    throw TheoryViolation("real block " + std::to_string(b.index) + " has no real defect class");
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (!conjugating_pair(g, candidates[0].D, candidates[0].E, candidates[i].D, candidates[i].E))
      throw TheoryViolation("real defect classes give non-conjugate defect pairs");
  DefectPair pair = candidates[0];
  // Move the pair so that D is the defect group of the first defect class.
  if (!pair.D.same_elements(d0)) {
    auto t0 = conjugating_element(g, pair.D, d0);
    if (!t0) throw TheoryViolation("defect groups of different defect classes are not conjugate");
    pair.D = d0;
    pair.E = conjugate_subgroup(pair.E, *t0);
  }
  const std::size_t index = pair.E.order() / pair.D.order();
  if (b.principal && index != 1) throw TheoryViolation("principal block with E != D");
  if (!b.principal && index != 2) throw TheoryViolation("non-principal real block with |E:D| != 2");
  return pair;
}

std::optional<std::size_t> brauer_correspondent(const CharacterTable& tg, const std::vector<BlockData>& gblocks,
                                                const CharacterTable& th, const BlockData& b,
                                                const Mod2Reduction& red) {
  const Group& g = tg.group();
  const Group& h = th.group();
  (void)red;
  std::vector<F2kElement> lam(g.num_classes());
  const auto& hcls = h.classes();
  for (std::size_t l = 0; l < hcls.size(); ++l) {
    std::size_t K = g.class_of(hcls[l].representative);
    lam[K].bits ^= b.lambda[l].bits;
  }
  for (const BlockData& B : gblocks)
    if (B.lambda == lam) return B.index;
  return std::nullopt;
}

std::string type_label(const Group& p) {
  if (p.order() > 64) return "order " + std::to_string(p.order());
  return iso_type_2group(p).label;
}

BlockSummary summarize_block(const CharacterTable& t, const BlockData& b, const Mod2Reduction& red) {
  BlockSummary s{b, std::nullopt, {}, {}, {}};
  if (b.real) {
    s.pair = extended_defect_group(t, b, red);
  } else {
    Group d = defect_group(t, b, red);
    s.pair = DefectPair{d, d, 0};
  }
  s.d_type = type_label(s.pair->D);
  s.e_type = b.real ? type_label(s.pair->E) : "";
  for (std::size_t chi : b.chars) s.eps.push_back(t.fs_indicator(chi));
  return s;
}

std::vector<BlockSummary> analyze_blocks(const CharacterTable& t) {
  Mod2Reduction red(static_cast<int>(t.exponent()));
  std::vector<BlockSummary> out;
  for (const BlockData& b : block_partition(t, red)) out.push_back(summarize_block(t, b, red));
  return out;
}

nlohmann::json block_report_json(const std::string& groupspec, const std::vector<BlockSummary>& blocks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : blocks) {
    arr.push_back({{"chars", s.block.chars},
                   {"defect", s.block.defect},
                   {"heights", s.block.heights},
                   {"l", s.block.l},
                   {"real", s.block.real},
                   {"principal", s.block.principal},
                   {"D_type", s.d_type},
                   {"E_type", s.block.real ? nlohmann::json(s.e_type) : nlohmann::json(nullptr)},
                   {"eps_vector", s.eps}});
  }
  return {{"groupspec", groupspec}, {"blocks", arr}};
}

}  // namespace fsind
