#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fsind/blocks.hpp"
#include "fsind/chartab.hpp"
#include "fsind/constructions.hpp"
#include "fsind/factory.hpp"
#include "fsind/groupspec.hpp"

using namespace fsind;

namespace {

using C = CyclotomicNumber;

std::vector<long long> degrees(const CharacterTable& t) {
  std::vector<long long> d;
  for (std::size_t i = 0; i < t.num_chars(); ++i) d.push_back(t.degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(CharacterTable, Degrees) {
  EXPECT_EQ(degrees(CharacterTable::compute(symmetric(4))), (std::vector<long long>{1, 1, 2, 3, 3}));
  EXPECT_EQ(degrees(CharacterTable::compute(psl2(7))), (std::vector<long long>{1, 3, 3, 6, 7, 8}));
  CharacterTable c3 = CharacterTable::compute(cyclic(3));
  EXPECT_EQ(degrees(c3), (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(c3.exponent(), 3u);
}

TEST(CharacterTable, Orthogonality) {
  for (const Group& g : {symmetric(4), quaternion(8), psl2(7), sl2(3), alternating(7)}) {
    CharacterTable t = CharacterTable::compute(g);
    mpz_class sum = 0;
    for (std::size_t i = 0; i < t.num_chars(); ++i) {
      sum += mpz_class(static_cast<long>(t.degree(i))) * static_cast<long>(t.degree(i));
      for (std::size_t j = 0; j < t.num_chars(); ++j)
        EXPECT_EQ(inner_product(g, t.character(i), t.character(j)), C(i == j ? 1 : 0));
    }
    EXPECT_EQ(sum, mpz_class(static_cast<unsigned long>(g.order())));
    for (std::size_t a = 0; a < t.num_classes(); ++a) {
      C s;
      for (std::size_t i = 0; i < t.num_chars(); ++i) s += t.character(i)[a] * t.character(i)[a].conjugate();
      EXPECT_EQ(s, C(static_cast<long long>(g.classes()[a].centralizer_order)));
    }
  }
}

TEST(CharacterTable, Indicators) {
  CharacterTable q8 = CharacterTable::compute(quaternion(8));
  EXPECT_EQ(q8.fs_indicator(0), 1);
  for (std::size_t i = 0; i < q8.num_chars(); ++i) EXPECT_EQ(q8.fs_indicator(i), q8.degree(i) == 2 ? -1 : 1);
  CharacterTable p = CharacterTable::compute(psl2(7));
  for (std::size_t i = 0; i < p.num_chars(); ++i) {
    if (p.degree(i) == 3) EXPECT_EQ(p.fs_indicator(i), 0);
    EXPECT_EQ(p.fs_indicator(i) == 0, !p.is_real(i));
  }
  CharacterTable c3 = CharacterTable::compute(cyclic(3));
  EXPECT_FALSE(c3.is_real(1));
  EXPECT_EQ(c3.fs_indicator(1), 0);
  EXPECT_EQ(c3.conjugate_char(1), 2u);
}

TEST(CharacterTable, SquareRootCounts) {
  CharacterTable q8 = CharacterTable::compute(quaternion(8));
  EXPECT_EQ(q8.sqrt_count()[0], C(2));
  CharacterTable d8 = CharacterTable::compute(dihedral(8));
  EXPECT_EQ(d8.sqrt_count()[0], C(6));
  for (const Group& g : {symmetric(5), sl2(3), psl2(9), quaternion(16)}) {
    CharacterTable t = CharacterTable::compute(g);
    ClassFunction theta = t.sqrt_count();
    std::vector<std::size_t> direct = enumerate_sqrt_counts(g);
    for (std::size_t c = 0; c < theta.size(); ++c) EXPECT_EQ(theta[c], C(static_cast<long long>(direct[c])));
  }
}

TEST(CharacterTable, TwoRationality) {
  CharacterTable s4 = CharacterTable::compute(symmetric(4));
  for (std::size_t i = 0; i < s4.num_chars(); ++i) EXPECT_TRUE(s4.is_2rational(i));
  // C3 characters are fixed by the Galois group over Q(zeta_3).
  CharacterTable c3 = CharacterTable::compute(cyclic(3));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(c3.is_2rational(i));
  CharacterTable c8 = CharacterTable::compute(cyclic(8));
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < 8; ++i) fixed += c8.is_2rational(i) ? 1 : 0;
  EXPECT_EQ(fixed, 2u);
  CharacterTable h = CharacterTable::compute(homocyclic_h());
  auto blocks = block_partition(h);
  ASSERT_EQ(blocks[0].k(), 8u);
  std::size_t rational = 0;
  for (std::size_t chi : blocks[0].chars) rational += h.is_2rational(chi) ? 1 : 0;
  EXPECT_EQ(rational, 4u);
}

TEST(CharacterTable, BrauerPermutationLemma) {
  for (const Group& g : {homocyclic_h(), sl2(5), cyclic(8)}) {
    CharacterTable t = CharacterTable::compute(g);
    for (long long k = 1; k < static_cast<long long>(t.exponent()); ++k) {
      if (std::gcd(k, static_cast<long long>(t.exponent())) != 1) continue;
      auto perm = t.galois_perm(k);
      std::size_t chars = 0, classes = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) chars += perm[i] == i ? 1 : 0;
      for (std::size_t c = 0; c < g.num_classes(); ++c) classes += g.power_class(c, k) == c ? 1 : 0;
      EXPECT_EQ(chars, classes);
    }
  }
}

TEST(ClassFunctions, RestrictInduce) {
  Group g = symmetric(4);
  Group h = sylow2(g);
  EXPECT_EQ(restrict_to(g, trivial_character(g), h), trivial_character(h));

  ClassFunction ind = induce(h, trivial_character(h), g);
  ClassFunction cosets = class_function(g, [&](const Perm& x) {
    long long fixed = 0;
    for (const Perm& y : g.elements())
      if (h.contains(y * x * y.inverse())) ++fixed;
    return C(fixed / static_cast<long long>(h.order()));
  });
  EXPECT_EQ(ind, cosets);

  ClassFunction conj = class_function(g, [&](const Perm& x) {
    long long fixed = 0;
    for (const Perm& y : g.elements()) fixed += y * x == x * y ? 1 : 0;
    return C(fixed);
  });
  for (const auto& k : g.classes()) EXPECT_EQ(conj[k.index], C(static_cast<long long>(k.centralizer_order)));

  CharacterTable tg = CharacterTable::compute(g), th = CharacterTable::compute(h);
  for (std::size_t i = 0; i < th.num_chars(); ++i)
    for (std::size_t j = 0; j < tg.num_chars(); ++j) {
      C lhs = inner_product(g, induce(h, th.character(i), g), tg.character(j));
      C rhs = inner_product(h, th.character(i), restrict_to(g, tg.character(j), h));
      EXPECT_EQ(lhs, rhs);
      EXPECT_TRUE(lhs.is_rational() && lhs.to_rational() >= 0);
    }
}

TEST(ClassFunctions, FongReynoldsMarkerIsIrreducible) {
  Example ex = build_groupspec("FR(D8,D16)");
  ASSERT_TRUE(ex.marker);
  EXPECT_EQ(inner_product(ex.group, *ex.marker, *ex.marker), C(1));
}

TEST(CharacterTable, JsonRoundTrip) {
  Group g = sl2(3);
  CharacterTable t = CharacterTable::compute(g);
  CharacterTable u = CharacterTable::from_json(g, t.to_json("SL(2,3)"));
  EXPECT_EQ(u.characters(), t.characters());
  EXPECT_EQ(u.fs_indicators(), t.fs_indicators());
  EXPECT_EQ(t.to_json("SL(2,3)").dump(), u.to_json("SL(2,3)").dump());
  EXPECT_ANY_THROW(CharacterTable::from_json(symmetric(4), t.to_json("SL(2,3)")));
}
