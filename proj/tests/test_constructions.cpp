#include <gtest/gtest.h>

#include "fsind/constructions.hpp"
#include "fsind/errors.hpp"
#include "fsind/factory.hpp"
#include "fsind/fixtures.hpp"
#include "fsind/groupspec.hpp"
#include "fsind/isotype.hpp"

using namespace fsind;

namespace {

std::string sylow_label(const Group& g) { return iso_type_2group(sylow2(g)).label; }

}  // namespace

TEST(FongReynolds, OrdersAndPair) {
  Example a = build_groupspec("FR(D8,D16)");
  EXPECT_EQ(a.group.order(), 48u);
  ASSERT_TRUE(a.predicted_pair);
  EXPECT_EQ(iso_type_2group(a.predicted_pair->first).label, "D8");
  EXPECT_EQ(iso_type_2group(a.predicted_pair->second).label, "D16");
  EXPECT_EQ(build_groupspec("FR(Q8,SD16)").group.order(), 48u);
}

TEST(FongReynolds, DirectProductCase) {
  Group h = dihedral(8);
  Example ex = build_groupspec("FR(D8,D8xC2)");
  EXPECT_TRUE(are_isomorphic(ex.group, direct_product(h, symmetric(3))));
}

TEST(FongReynolds, NotTheForbiddenSubgroups) {
  Example ex = build_groupspec("FR(D8,D16)");
  const Group& g = ex.group;
  const std::size_t n = g.degree() - 3;
  bool transposition = false, outside = false;
  Group d16 = dihedral(16);
  Example hhat = build_groupspec("D16");
  Group h = locate_index2(dihedral(8), hhat);
  for (const Perm& x : g.elements()) {
    std::vector<Point> tail{x[n], x[n + 1], x[n + 2]}, head;
    const int moved = (tail[0] != n) + (tail[1] != n + 1) + (tail[2] != n + 2);
    if (moved == 2) transposition = true;
    for (std::size_t i = 0; i < n; ++i) head.push_back(x[i]);
    if (!h.contains(Perm(head))) outside = true;
  }
  EXPECT_TRUE(transposition);  // G is not Hhat x C3
  EXPECT_TRUE(outside);        // G is not H x S3
  EXPECT_THROW(fong_reynolds(dihedral(8), dihedral(8)), InvalidArgument);
}

TEST(Extensions, QuaternionType) {
  Example e3 = sl2_q_extension(3);
  EXPECT_EQ(e3.group.order(), 48u);
  EXPECT_EQ(sylow_label(e3.group), "Q16");
  ASSERT_TRUE(e3.base);
  // Non-split: every involution of Hhat already lies in SL(2,3).
  for (const Perm& x : set_difference(e3.group, *e3.base)) EXPECT_NE(x.order(), 2u);
  EXPECT_EQ(build_groupspec("FR(SL(2,3),SL(2,3).2Q)").group.order(), 144u);
  EXPECT_EQ(build_groupspec("FR(SL(2,5),SL(2,5).2Q)").group.order(), 720u);
  EXPECT_THROW(sl2_q_extension(11), InvalidArgument);
}

TEST(Extensions, SemidihedralType) {
  EXPECT_EQ(sylow_label(sl2_sd_extension(3).group), "SD16");
  EXPECT_EQ(sylow_label(sl2_sd_extension(5).group), "SD16");
  EXPECT_EQ(build_groupspec("FR(SL(2,3),SL(2,3).2SD)").group.order(), 144u);
  EXPECT_EQ(build_groupspec("FR(SL(2,5),SL(2,5).2SD)").group.order(), 720u);
}

TEST(Extensions, ProjectiveFamilies) {
  Group pgl7 = pgl_with_base(7).group;
  EXPECT_EQ(pgl7.order(), 336u);
  EXPECT_EQ(sylow_label(pgl7), "D16");
  // The index-2 subgroups of PGammaL(2,9): M10 with SD16 and S6 with D8xC2.
  Example star = pgl_star(9);
  EXPECT_EQ(star.group.order(), 720u);
  EXPECT_EQ(sylow_label(star.group), "SD16");
  Example semi = semilinear_psl(9);
  EXPECT_EQ(semi.group.order(), 720u);
  EXPECT_EQ(sylow_label(semi.group), "D8xC2");
  EXPECT_THROW(pgl_star(7), InvalidArgument);
}

TEST(Homocyclic, Family) {
  Group h = homocyclic_h();
  EXPECT_EQ(h.order(), 48u);
  EXPECT_EQ(iso_type_2group(sylow2(h)).label, "C4xC4");
  Group s = homocyclic_s3();
  EXPECT_EQ(s.order(), 96u);
  EXPECT_TRUE(h.is_subgroup_of(s));
  EXPECT_EQ(sylow_label(s), "C4wrC2");
  EXPECT_EQ(build_groupspec("FR(C4^2:C3,C4^2:S3)").group.order(), 288u);
}

TEST(Groupspec, Parse) {
  SpecNode fr = parse_groupspec("FR(Q8,Q16)");
  EXPECT_EQ(fr.kind, SpecNode::Kind::FR);
  ASSERT_EQ(fr.children.size(), 2u);
  EXPECT_EQ(fr.children[0].kind, SpecNode::Kind::Atom);
  SpecNode p = parse_groupspec("PSL(2,7)");
  EXPECT_EQ(p.kind, SpecNode::Kind::Atom);
  EXPECT_EQ(p.name, "PSL");
  EXPECT_EQ(p.args.back(), 7);
  SpecNode d = parse_groupspec("D(8) x S(3)");
  EXPECT_EQ(d.kind, SpecNode::Kind::Product);
  EXPECT_EQ(build_groupspec("D(8) x S(3)").group.order(), 48u);
  EXPECT_EQ(build_groupspec("Q(8)").group.order(), 8u);
  EXPECT_EQ(build_groupspec("C4^2").group.order(), 16u);
}

TEST(Groupspec, Errors) {
  try {
    parse_groupspec("FR(Q8,Q16");
    FAIL() << "expected a syntax error";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
  EXPECT_THROW(build_groupspec("Foo(3)"), InvalidArgument);
  EXPECT_THROW(build_groupspec("fixture(missing)"), NotMember);
  EvalOptions small;
  small.max_order = 100;
  EXPECT_THROW(build_groupspec("S6", small), TooLarge);
}

TEST(Groupspec, Fixtures) {
  Fixture f = parse_fixture(R"({"name": "c4", "degree": 4, "generators": [[1,2,3,0]],
    "expected": {"order": 4, "exponent": 4, "center_order": 4, "derived_order": 1,
                 "abelianization": [4], "involution_count": 1}})");
  EvalOptions opts;
  opts.fixtures.emplace("c4", f.group);
  EXPECT_EQ(build_groupspec("fixture(c4) x C3", opts).group.order(), 12u);
}
