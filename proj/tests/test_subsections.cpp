#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fsind/constructions.hpp"
#include "fsind/groupspec.hpp"
#include "fsind/subsections.hpp"

using namespace fsind;

namespace {

using C = CyclotomicNumber;

struct Case {
  Example ex;
  CharacterTable t;
  Mod2Reduction red;
  std::vector<BlockData> blocks;
  std::size_t designated;
  std::vector<Subsection> subs;
  std::vector<GenDecompColumn> cols;
  explicit Case(const std::string& spec)
      : ex(build_groupspec(spec)),
        t(CharacterTable::compute(ex.group)),
        red(static_cast<int>(t.exponent())),
        blocks(block_partition(t, red)),
        designated(designated_block(ex, t, blocks)),
        subs(enumerate_subsections(t, blocks[designated], red)),
        cols(all_columns(t, blocks[designated], subs)) {}
  const BlockData& B() const { return blocks[designated]; }
  DefectPair pair() const { return extended_defect_group(t, B(), red); }
  const GenDecompColumn* column(std::size_t order, bool central = false) const {
    for (const auto& c : cols) {
      const Subsection& s = subs[c.subsection];
      if (s.x_order != order) continue;
      if (central && ex.group.classes()[s.x_class].size != 1) continue;
      return &c;
    }
    return nullptr;
  }
  // Entries of a column on the height-0 characters, sorted.
  std::vector<C> height0(const GenDecompColumn& c) const {
    std::vector<C> v;
    for (std::size_t i = 0; i < B().chars.size(); ++i)
      if (B().heights[i] == 0) v.push_back(c.d[i]);
    return v;
  }
};

std::vector<long long> as_ints(const std::vector<C>& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(x.to_rational().get_num().get_si());
  std::sort(out.begin(), out.end());
  return out;
}

// Up to an overall sign.
bool same_up_to_sign(std::vector<long long> a, std::vector<long long> b) {
  std::sort(b.begin(), b.end());
  if (a == b) return true;
  for (auto& x : b) x = -x;
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST(Subsections, CountIdentity) {
  Case p("PSL(2,7)");
  std::vector<int> ls;
  for (const auto& s : p.subs) ls.push_back(s.l());
  EXPECT_EQ(ls, (std::vector<int>{3, 1, 1}));
  Case h("C4^2:C3");
  EXPECT_EQ(h.subs.size(), 6u);
  int sum = 0;
  for (const auto& s : h.subs) sum += s.l();
  EXPECT_EQ(sum, 8);
  Case q("Q8");
  EXPECT_EQ(q.subs.size(), 5u);
  for (const auto& s : q.subs) EXPECT_EQ(s.l(), 1);
}

TEST(Subsections, NilpotentQ8DecompositionMatrix) {
  Case q("Q8");
  const GenDecompColumn* c = q.column(1);
  ASSERT_NE(c, nullptr);
  std::vector<long long> m = c->brauer.mult;
  std::sort(m.begin(), m.end());
  EXPECT_EQ(m, (std::vector<long long>{1, 1, 1, 1, 2}));
  // phi is the trivial Brauer character and Phi the regular character.
  EXPECT_EQ(c->brauer.Phi[0], C(8));
  for (std::size_t k = 1; k < c->brauer.Phi.size(); ++k) EXPECT_TRUE(c->brauer.Phi[k].is_zero());
  const GenDecompColumn* y = q.column(4);
  ASSERT_NE(y, nullptr);
  EXPECT_TRUE(same_up_to_sign(as_ints(q.height0(*y)), {1, 1, -1, -1}));
}

TEST(Subsections, SL23ColumnSigns) {
  Case s("SL(2,3)");
  const GenDecompColumn* y = s.column(4);
  ASSERT_NE(y, nullptr);
  EXPECT_TRUE(same_up_to_sign(as_ints(s.height0(*y)), {1, 1, 1, -1}));
}

TEST(Subsections, CartanNormsAndOrthogonality) {
  for (const char* spec : {"D8", "FR(D8,SD16)", "PSL(2,7)", "C4^2:C3"}) {
    Case s(spec);
    EXPECT_EQ(column_orthogonality_check(s.B(), s.subs, s.cols).status, "pass") << spec;
    for (const auto& c : s.cols) {
      C norm;
      for (const auto& v : c.d) norm += v * v.conjugate();
      EXPECT_EQ(norm, C(1LL << s.subs[c.subsection].block.defect));
      for (const auto& v : c.d) EXPECT_TRUE(v.is_integral());
    }
  }
  Case d("D8");
  const GenDecompColumn* y = d.column(4);
  ASSERT_NE(y, nullptr);
  EXPECT_EQ(d.subs[y->subsection].block.defect, 2);
}

TEST(Subsections, EpsPhiPrincipalD8) {
  // E = D here, yet eps(Phi^z) = #{y : y^2 = z} = 2 for the central involution.
  Case d("D8");
  const GenDecompColumn* z = d.column(2, true);
  ASSERT_NE(z, nullptr);
  EXPECT_EQ(z->eps_Phi, 2);
  const GenDecompColumn* one = d.column(1);
  EXPECT_EQ(one->eps_Phi, 6);
}

TEST(Subsections, LemPhixAndLocnilOnFongReynolds) {
  Case q("FR(Q8,Q16)");
  const DefectPair pair = q.pair();
  for (const auto& r : lemphix_checks(q.t, q.B(), pair, q.subs, q.cols)) EXPECT_EQ(r.status, "pass") << r.check;
  std::set<long long> order4;
  for (std::size_t i = 0; i < q.subs.size(); ++i) {
    const GenDecompColumn* c = nullptr;
    for (const auto& cc : q.cols)
      if (cc.subsection == i) c = &cc;
    CheckResult r = locnil_check(q.t, q.B(), pair, q.subs[i], c);
    EXPECT_NE(r.status, "fail");
    if (q.subs[i].x_order == 4 && r.status == "pass") {
      EXPECT_EQ(r.lhs, r.rhs);
      order4.insert(r.lhs.get<long long>());
    }
  }
  // x = a^2 has square roots a, a^5 in Q16 outside Q8; x = b has none.
  EXPECT_EQ(order4, (std::set<long long>{0, 2}));

  // The central involution has C_D(x) = D8, outside the hypothesis.
  Case sd("FR(D8,SD16)");
  const DefectPair p2 = sd.pair();
  const GenDecompColumn* z = sd.column(2, true);
  ASSERT_NE(z, nullptr);
  EXPECT_EQ(locnil_check(sd.t, sd.B(), p2, sd.subs[z->subsection], z).status, "skipped");
}

TEST(Subsections, LemPhixPSL27) {
  Case p("PSL(2,7)");
  const DefectPair pair = p.pair();
  auto rs = lemphix_checks(p.t, p.B(), pair, p.subs, p.cols);
  EXPECT_FALSE(rs.empty());
  for (const auto& r : rs) EXPECT_EQ(r.status, "pass") << r.check;
}

TEST(Subsections, Conjectures) {
  for (const char* spec : {"FR(D8,D8xC2)", "FR(D8,D8*C4)", "FR(Q8,SD16)", "FR(PSL(2,7),PGL(2,7))"}) {
    Case s(spec);
    auto rs = conjecture_checks(s.t, s.B(), s.pair(), s.subs, s.cols);
    ASSERT_FALSE(rs.empty()) << spec;
    for (const auto& r : rs) EXPECT_NE(r.status, "fail") << spec << " " << r.check;
  }
  Case a("FR(D8,D8xC2)");
  auto rs = conjecture_checks(a.t, a.B(), a.pair(), a.subs, a.cols);
  auto conc = std::find_if(rs.begin(), rs.end(), [](const CheckResult& r) { return r.check == "conC"; });
  ASSERT_NE(conc, rs.end());
  // D8 x C2 has 11 involutions, 5 of them in D8.
  EXPECT_EQ(conc->rhs, 6);
  Case b("FR(D8,D8*C4)");
  rs = conjecture_checks(b.t, b.B(), b.pair(), b.subs, b.cols);
  conc = std::find_if(rs.begin(), rs.end(), [](const CheckResult& r) { return r.check == "conC"; });
  EXPECT_EQ(conc->lhs, conc->rhs);
  // Principal blocks are outside the conjectures' scope.
  Case p("PSL(2,7)");
  EXPECT_TRUE(conjecture_checks(p.t, p.B(), p.pair(), p.subs, p.cols).empty());
}

TEST(Subsections, HomocyclicMatrixFit) {
  Case h("C4^2:C3");
  CheckResult r = homocyclic_gendecomp_check(h.t, h.B(), h.subs, h.cols);
  EXPECT_EQ(r.status, "pass");
  const GenDecompColumn* x = h.column(2);
  ASSERT_NE(x, nullptr);
  std::vector<long long> v = as_ints(x->d);
  EXPECT_TRUE(same_up_to_sign(v, {1, 1, 1, 3, -1, -1, -1, -1}));
  Case p("PSL(2,7)");
  EXPECT_EQ(homocyclic_gendecomp_check(p.t, p.B(), p.subs, p.cols).status, "skipped");
}

TEST(Subsections, CheckJson) {
  CheckResult r{"conC", 1, "pass", 2, 2, nullptr};
  nlohmann::json j = check_to_json("FR(D8,D16)", r);
  for (const char* key : {"check", "groupspec", "block", "status", "lhs", "rhs", "witness"}) EXPECT_TRUE(j.contains(key));
}
