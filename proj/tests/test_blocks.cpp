#include <gtest/gtest.h>

#include "fsind/blocks.hpp"
#include "fsind/errors.hpp"
#include "fsind/constructions.hpp"
#include "fsind/factory.hpp"
#include "fsind/groupspec.hpp"
#include "fsind/isotype.hpp"

using namespace fsind;

namespace {

struct Case {
  Example ex;
  CharacterTable t;
  Mod2Reduction red;
  std::vector<BlockData> blocks;
  std::size_t designated;
  explicit Case(const std::string& spec)
      : ex(build_groupspec(spec)),
        t(CharacterTable::compute(ex.group)),
        red(static_cast<int>(t.exponent())),
        blocks(block_partition(t, red)),
        designated(designated_block(ex, t, blocks)) {}
  const BlockData& B() const { return blocks[designated]; }
};

}  // namespace

TEST(Blocks, PartitionQ8xC3) {
  Case s("Q8xC3");
  ASSERT_EQ(s.blocks.size(), 3u);
  EXPECT_TRUE(s.blocks[0].principal);
  EXPECT_EQ(s.blocks[0].k(), 5u);
  for (const auto& b : s.blocks) {
    EXPECT_EQ(b.l, 1);
    EXPECT_EQ(b.defect, 3);
    EXPECT_EQ(type_label(defect_group(s.t, b, s.red)), "Q8");
  }
}

TEST(Blocks, TwoGroupsHaveOneBlock) {
  for (const Group& g : {dihedral(16), quaternion(8), wreath_cyclic_c2(4)}) {
    CharacterTable t = CharacterTable::compute(g);
    EXPECT_EQ(block_partition(t).size(), 1u);
  }
}

TEST(Blocks, PartitionInvariants) {
  for (const char* spec : {"S5", "PSL(2,7)", "SL(2,5)", "FR(D8,SD16)", "A7"}) {
    Case s(spec);
    std::size_t k = 0;
    int l = 0;
    for (const auto& b : s.blocks) {
      k += b.k();
      l += b.l;
      int min_h = 99;
      for (int h : b.heights) min_h = std::min(min_h, h);
      EXPECT_EQ(min_h, 0);
      const int dmin = static_cast<int>(nu2(static_cast<std::size_t>(s.t.degree(b.chars[0])))) - b.heights[0];
      EXPECT_EQ(b.defect, static_cast<int>(nu2(s.ex.group.order())) - dmin);
    }
    EXPECT_EQ(k, s.t.num_chars()) << spec;
    EXPECT_EQ(l, static_cast<int>(s.t.odd_classes().size())) << spec;
  }
}

TEST(Blocks, DihedralBlockShape) {
  for (const char* spec : {"PSL(2,7)", "PSL(2,17)", "FR(D8,D16)", "PGL(2,5)"}) {
    Case s(spec);
    const BlockData& b = s.B();
    EXPECT_EQ(b.k(), (std::size_t{1} << (b.defect - 2)) + 3) << spec;
    EXPECT_EQ(std::count(b.heights.begin(), b.heights.end(), 0), 4) << spec;
  }
}

TEST(Blocks, LittleL) {
  EXPECT_EQ(Case("PSL(2,7)").blocks[0].l, 3);
  EXPECT_EQ(Case("S5").blocks[0].l, 2);
  EXPECT_EQ(Case("Q8xC3").blocks[0].l, 1);
  Case a("A7");
  EXPECT_EQ(little_l(a.t, a.blocks[0].chars), a.blocks[0].l);
}

TEST(Blocks, DefectGroups) {
  Case s("S5");
  EXPECT_EQ(defect_group(s.t, s.blocks[0], s.red).order(), 8u);
  Case fr("FR(D8,SD16)");
  EXPECT_FALSE(fr.B().principal);
  EXPECT_EQ(type_label(defect_group(fr.t, fr.B(), fr.red)), "D8");
}

TEST(Blocks, ExtendedDefectGroups) {
  Case p("PSL(2,7)");
  DefectPair a = extended_defect_group(p.t, p.blocks[0], p.red);
  EXPECT_EQ(type_label(a.D), "D8");
  EXPECT_TRUE(a.E.same_elements(a.D));

  Case q("FR(Q8,Q16)");
  ASSERT_TRUE(q.B().real);
  DefectPair b = extended_defect_group(q.t, q.B(), q.red);
  EXPECT_EQ(type_label(b.D), "Q8");
  EXPECT_EQ(type_label(b.E), "Q16");
  EXPECT_TRUE(b.D.is_subgroup_of(b.E));

  Case d("FR(D8,D8xC2)");
  DefectPair c = extended_defect_group(d.t, d.B(), d.red);
  EXPECT_EQ(type_label(c.E), "D8xC2");
  EXPECT_THROW(extended_defect_group(Case("C3").t, Case("C3").blocks[1], Mod2Reduction(3)), InvalidArgument);
}

TEST(Blocks, BrauerCorrespondent) {
  Case s("PSL(2,7)");
  for (const auto& b : s.blocks) EXPECT_EQ(brauer_correspondent(s.t, s.blocks, s.t, b, s.red), b.index);
  const Group& g = s.ex.group;
  for (const auto& k : g.classes()) {
    if (k.element_order != 2) continue;
    Group c = centralizer(g, k.representative);
    CharacterTable tc = CharacterTable::compute(c);
    auto cb = block_partition(tc, s.red);
    EXPECT_EQ(brauer_correspondent(s.t, s.blocks, tc, cb[0], s.red), 0u);
  }
}

TEST(Blocks, ReportJson) {
  Case s("FR(D8,SD16)");
  auto sums = analyze_blocks(s.t);
  nlohmann::json doc = block_report_json("FR(D8,SD16)", sums);
  EXPECT_EQ(doc["groupspec"], "FR(D8,SD16)");
  const auto& b = doc["blocks"][s.designated];
  EXPECT_EQ(b["D_type"], "D8");
  EXPECT_EQ(b["E_type"], "SD16");
  for (const char* key : {"chars", "defect", "heights", "l", "real", "principal", "eps_vector"}) EXPECT_TRUE(b.contains(key));
}
