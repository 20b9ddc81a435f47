#include <gtest/gtest.h>

#include <random>

#include "fsind/cyclotomic.hpp"
#include "fsind/errors.hpp"

using namespace fsind;

namespace {

using C = CyclotomicNumber;

C random_integral(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  ExponentAccumulator acc(n);
  for (int j = 0; j < n; ++j) acc.add(j, d(rng));
  return acc.value();
}

}  // namespace

TEST(Cyclotomic, Arithmetic) {
  EXPECT_EQ(C::zeta(4) * C::zeta(4), C(-1));
  EXPECT_EQ(C::zeta(3) + C::zeta(3, 2), C(-1));
  const C i = C::zeta(4);
  EXPECT_EQ((C(1) + i * C(2)) * (C(1) - i * C(2)), C(5));
  const C x = C(3) + C::zeta(7) - C::zeta(5, 2);
  EXPECT_EQ(x * x.inverse(), C(1));
  EXPECT_THROW(C().inverse(), Error);
}

TEST(Cyclotomic, MixedConductorsEmbedIntoLcm) {
  const C s = C::zeta(3) + C::zeta(4);
  EXPECT_EQ(s.conductor() % 12, 0);
  EXPECT_EQ(s - C::zeta(4), C::zeta(3));
  const C z = C::zeta(5, 2);
  EXPECT_EQ(z.embed(15), z);
  EXPECT_EQ(z.embed(40), z);
}

TEST(Cyclotomic, GaloisAndConjugation) {
  EXPECT_EQ(C::zeta(8).conjugate(), C::zeta(8, 7));
  C z = C::zeta(5);
  C w = z;
  for (int k = 0; k < 4; ++k) w = w.galois(2);
  EXPECT_EQ(w, z);
  EXPECT_NE(z.galois(2), z);
  EXPECT_EQ(C(mpq_class(3, 7)).conjugate(), C(mpq_class(3, 7)));
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    C a = random_integral(rng, 24), b = random_integral(rng, 24);
    EXPECT_EQ(a.conjugate().conjugate(), a);
    EXPECT_EQ((a * b).galois(5), a.galois(5) * b.galois(5));
    EXPECT_EQ(a.conjugate(), a.galois(23));
  }
  EXPECT_THROW(z.galois(5), Error);
}

TEST(Cyclotomic, RationalityAndIntegrality) {
  EXPECT_TRUE((C::zeta(8) + C::zeta(8, 7)).is_zero() == false);
  EXPECT_FALSE((C::zeta(8) + C::zeta(8, 7)).is_rational());
  EXPECT_TRUE((C::zeta(7) * C::zeta(7, 6)).is_rational());
  EXPECT_TRUE(C::zeta(9).is_integral());
  EXPECT_FALSE(C(mpq_class(1, 2)).is_integral());
}

TEST(Mod2Reduction, Images) {
  Mod2Reduction red(12);
  EXPECT_EQ(red.reduce(C::zeta(4)), red.reduce(C(1)));
  EXPECT_TRUE(red.reduce(C(6)).is_zero());
  const F2kElement t = red.reduce(C::zeta(3));
  EXPECT_EQ(red.degree(), 2);
  // t^2 + t + 1 = 0
  EXPECT_TRUE(red.add(red.add(red.mul(t, t), t), red.reduce(C(1))).is_zero());
  EXPECT_FALSE(t == red.reduce(C(1)));
  EXPECT_THROW(red.reduce(C(mpq_class(1, 2))), Error);
  EXPECT_EQ(red.reduce(C(mpq_class(1, 3))), red.reduce(C(1)));
}

TEST(Mod2Reduction, RingHomomorphism) {
  Mod2Reduction red(120);
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    C a = random_integral(rng, 120), b = random_integral(rng, 120);
    EXPECT_EQ(red.reduce(a * b), red.mul(red.reduce(a), red.reduce(b)));
    EXPECT_EQ(red.reduce(a + b), red.add(red.reduce(a), red.reduce(b)));
  }
}
