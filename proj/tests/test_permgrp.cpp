#include <gtest/gtest.h>

#include <numeric>

#include "fsind/errors.hpp"
#include "fsind/factory.hpp"
#include "fsind/fixtures.hpp"
#include "fsind/group.hpp"
#include "fsind/isotype.hpp"

using namespace fsind;

namespace {

Group d8_on_square() {
  return Group::generate({Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
}

std::vector<std::size_t> class_sizes(const Group& g) {
  std::vector<std::size_t> out;
  for (const auto& k : g.classes()) out.push_back(k.size);
  return out;
}

void expect_class_equation(const Group& g) {
  std::size_t total = 0;
  for (const auto& k : g.classes()) {
    EXPECT_EQ(k.size * k.centralizer_order, g.order());
    total += k.size;
  }
  EXPECT_EQ(total, g.order());
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    EXPECT_EQ(g.power_class(c, static_cast<long long>(g.order())), 0u);
}

}  // namespace

TEST(Perm, CompositionActsOnTheRight) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  // 0 -> 1 under a, then 1 -> 2 under b.
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_TRUE((a.inverse() * a).is_identity());
  EXPECT_EQ(Perm::from_cycles(5, {{0, 1, 2}, {3, 4}}).order(), 6u);
}

TEST(Group, Orders) {
  EXPECT_EQ(d8_on_square().order(), 8u);
  EXPECT_EQ(Group::generate({Perm(5)}).order(), 1u);
  std::vector<Perm> three_cycles;
  for (Point i = 0; i + 2 < 7; ++i) three_cycles.push_back(Perm::from_cycles(7, {{i, Point(i + 1), Point(i + 2)}}));
  EXPECT_EQ(Group::generate(three_cycles).order(), 2520u);
}

TEST(Group, DegreeMismatchAndSizeGuard) {
  EXPECT_THROW(Group::generate({Perm(3), Perm(4)}), InvalidArgument);
  EXPECT_THROW(Group::generate(symmetric(9).generators(), "", 1000), TooLarge);
}

TEST(Group, ConjugacyClasses) {
  EXPECT_EQ(class_sizes(quaternion(8)), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(class_sizes(cyclic(3)), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(psl2(7).num_classes(), 6u);
  for (const Group& g : {quaternion(8), psl2(7), symmetric(5), dihedral(16), sl2(5)}) expect_class_equation(g);
}

TEST(Group, ClassOf) {
  Group d8 = d8_on_square();
  EXPECT_EQ(d8.class_of(Perm(4)), 0u);
  Perm r = Perm::from_cycles(4, {{0, 1, 2, 3}});
  EXPECT_EQ(d8.classes()[d8.class_of(r * r)].size, 1u);
  Group s4 = symmetric(4);
  EXPECT_NE(s4.class_of(Perm::from_cycles(4, {{0, 1}, {2, 3}})), s4.class_of(Perm::from_cycles(4, {{0, 1}})));
  EXPECT_THROW(d8.class_of(Perm::from_cycles(4, {{0, 1}})), NotMember);
}

TEST(Group, Centralizers) {
  Group s3 = symmetric(3);
  Perm c = Perm::from_cycles(3, {{0, 1, 2}});
  EXPECT_EQ(centralizer(s3, c).order(), 3u);
  EXPECT_EQ(extended_centralizer(s3, c).order(), 6u);
  Group c12 = cyclic(12);
  for (const Perm& g : c12.elements()) EXPECT_EQ(extended_centralizer(c12, g).order(), 12u);
  Group q8 = quaternion(8);
  for (const auto& k : q8.classes())
    if (k.element_order == 4) {
      EXPECT_EQ(centralizer(q8, k.representative).order(), 4u);
      EXPECT_EQ(extended_centralizer(q8, k.representative).order(), 8u);
    }
  for (const Group& g : {symmetric(4), psl2(7), sl2(3)})
    for (const auto& k : g.classes()) {
      const std::size_t a = centralizer(g, k.representative).order();
      const std::size_t b = extended_centralizer(g, k.representative).order();
      EXPECT_TRUE(b == a || b == 2 * a);
      EXPECT_EQ(b == 2 * a, g.class_of(k.representative.inverse()) == k.index && k.element_order > 2);
    }
}

TEST(Group, Sylow2) {
  EXPECT_EQ(iso_type_2group(sylow2(symmetric(4))).label, "D8");
  EXPECT_EQ(sylow2(cyclic(3)).order(), 1u);
  EXPECT_EQ(iso_type_2group(sylow2(pgl2(7))).label, "D16");
  EXPECT_EQ(iso_type_2group(sylow2(pgl2(9))).label, "D16");
  EXPECT_EQ(iso_type_2group(sylow2(psl2(7))).label, "D8");
  for (const Group& g : {symmetric(5), psl2(9), sl2(5)}) {
    Group p = sylow2(g), q = sylow2_containing(g, Group::trivial(g.degree()));
    EXPECT_EQ(p.order(), std::size_t{1} << nu2(g.order()));
    EXPECT_TRUE(is_conjugate_subgroup(g, p, q));
  }
}

TEST(Group, SubgroupTools) {
  Group s4 = symmetric(4);
  Group v4 = Group::generate({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(normalizer(s4, v4).order(), 24u);
  Group a = Group::generate({Perm::from_cycles(4, {{0, 1}})});
  Group b = Group::generate({Perm::from_cycles(4, {{0, 1}, {2, 3}})});
  EXPECT_FALSE(is_conjugate_subgroup(s4, a, b));
  Group a2 = Group::generate({Perm::from_cycles(4, {{2, 3}})});
  EXPECT_TRUE(is_conjugate_subgroup(s4, a, a2));
  EXPECT_EQ(index2_subgroups(s4).size(), 1u);
}

TEST(IsoType, Catalog) {
  Group c2 = cyclic(2);
  EXPECT_EQ(iso_type_2group(central_product(dihedral(8), cyclic(4))).label,
            iso_type_2group(central_product(quaternion(8), cyclic(4))).label);
  EXPECT_EQ(iso_type_2group(direct_product(direct_product(c2, c2), c2)).label, "C2xC2xC2");
  EXPECT_EQ(iso_type_2group(quaternion(16)).label, "Q16");
  EXPECT_EQ(iso_type_2group(semidihedral(32)).label, "SD32");
  EXPECT_EQ(iso_type_2group(wreath_cyclic_c2(4)).label, "C4wrC2");
  EXPECT_FALSE(are_isomorphic(dihedral(8), quaternion(8)));
}

TEST(IsoType, InvariantUnderRelabelling) {
  Group d16 = dihedral(16);
  // Conjugate every generator by a fixed point relabelling.
  std::vector<Point> img(d16.degree());
  std::iota(img.begin(), img.end(), 0);
  std::reverse(img.begin(), img.end());
  Perm s(img);
  std::vector<Perm> gens;
  for (const Perm& g : d16.generators()) gens.push_back(g.conjugate_by(s));
  EXPECT_EQ(iso_type_2group(Group::generate(gens)).label, "D16");
}

TEST(Factory, Families) {
  Group p = psl2(7);
  EXPECT_EQ(p.order(), 168u);
  EXPECT_EQ(p.degree(), 8u);
  EXPECT_EQ(involution_count(quaternion(8)), 1u);
  EXPECT_EQ(wreath_cyclic_c2(4).order(), 32u);
  EXPECT_EQ(pgl2(7).order(), 336u);
  EXPECT_EQ(alternating(5).order(), 60u);
}

TEST(Fixtures, LoadAndReject) {
  const std::string good = R"({"name": "d8", "degree": 4, "generators": [[1,2,3,0],[2,1,0,3]],
    "expected": {"order": 8, "exponent": 4, "center_order": 2, "derived_order": 2,
                 "abelianization": [2,2], "involution_count": 5}})";
  Fixture f = parse_fixture(good);
  EXPECT_EQ(f.name, "d8");
  EXPECT_EQ(f.group.order(), 8u);
  std::string bad = good;
  bad.replace(bad.find("\"involution_count\": 5"), 21, "\"involution_count\": 3");
  EXPECT_THROW(parse_fixture(bad), Corruption);
  EXPECT_THROW(parse_fixture("{\"name\": 1}"), InvalidArgument);
}
