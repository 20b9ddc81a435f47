#include "fsind/constructions.hpp"

#include "fsind/errors.hpp"
#include "fsind/factory.hpp"
#include "fsind/finite_field.hpp"
#include "fsind/isotype.hpp"

namespace fsind {

namespace {

Perm pad(const Perm& p, std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = i < p.degree() ? p[i] : static_cast<Point>(i);
  return Perm(img);
}

const std::vector<std::pair<int, int>> kE1{{1, 0}};

Group generated_by(const LinearAction& act, const std::vector<SemilinearMap>& maps, std::string name) {
  std::vector<Perm> perms;
  for (const auto& m : maps) perms.push_back(act.perm_of(m));
  return Group::generate(perms, std::move(name));
}

bool same_type(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (a.order() <= 256) return are_isomorphic(a, b);
  return fingerprint(a) == fingerprint(b);
}

std::string qs(int q) { return std::to_string(q); }

}  // namespace

Group pad_degree(const Group& g, std::size_t extra) {
  const std::size_t n = g.degree() + extra;
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) gens.push_back(pad(s, n));
  if (gens.empty()) gens.emplace_back(n);
  return Group::generate(gens, g.name());
}

std::size_t designated_block(const Example& ex, const CharacterTable& t, const std::vector<BlockData>& blocks) {
  std::size_t chi = 0;
  if (ex.marker) {
    chi = t.find_character(*ex.marker);
    if (chi == static_cast<std::size_t>(-1)) throw TheoryViolation("designated character is not irreducible");
  }
  for (const BlockData& b : blocks)
    if (b.contains(chi)) return b.index;
  throw Corruption("designated character lies in no block");
}

Example fong_reynolds(const Group& h, const Group& hhat) {
  if (hhat.order() != 2 * h.order() || !h.is_subgroup_of(hhat))
    throw InvalidArgument("fong_reynolds: H must have index 2 in Hhat");
  const std::size_t n = hhat.degree();
  const std::size_t deg = n + 3;
  const auto a = static_cast<Point>(n), b = static_cast<Point>(n + 1), c = static_cast<Point>(n + 2);
  std::vector<Perm> hgens;
  for (const Perm& s : h.generators()) hgens.push_back(pad(s, deg));
  const Perm three = Perm::from_cycles(deg, {{a, b, c}});
  hgens.push_back(three);
  const Perm* outside = nullptr;
  for (const Perm& s : hhat.generators())
    if (!h.contains(s)) {
      outside = &s;
      break;
    }
  if (!outside) throw InvalidArgument("fong_reynolds: Hhat generators all lie in H");
  std::vector<Perm> gens = hgens;
  gens.push_back(pad(*outside, deg) * Perm::from_cycles(deg, {{a, b}}));
  const std::string name = "FR(" + h.name() + "," + hhat.name() + ")";
  Group g = Group::generate(gens, name);
  if (g.order() != 3 * hhat.order()) throw Corruption("fong_reynolds: unexpected order");

  Group hc3 = Group::generate(hgens, h.name() + "xC3");
  ClassFunction theta = class_function(hc3, [&](const Perm& x) {
    const int k = (static_cast<int>(x[a]) - static_cast<int>(a) + 3) % 3;
    return CyclotomicNumber::zeta(3, k);
  });
  ClassFunction chi = induce(hc3, theta, g);
  if (inner_product(g, chi, chi) != CyclotomicNumber(1))
    throw InvalidArgument("fong_reynolds: induced character is reducible");
  Example ex{g, std::nullopt, chi, std::make_pair(sylow2(h), sylow2(hhat))};
  return ex;
}

Group locate_index2(const Group& h, const Example& hhat) {
  if (hhat.base && same_type(*hhat.base, h)) return *hhat.base;
  for (const Group& k : index2_subgroups(hhat.group))
    if (same_type(k, h)) return k.with_name(h.name());
  throw InvalidArgument("no index-2 subgroup of " + hhat.group.name() + " is isomorphic to " + h.name());
}

Example sl2_q_extension(int q) {
  if (q != 3 && q != 5 && q != 7) throw InvalidArgument("sl2_q_extension: q must be 3, 5 or 7");
  // Prime-field elements keep their integer encoding inside F_{q^2}.
  FiniteField big(q * q);
  FiniteField small(q);
  std::vector<SemilinearMap> sl = sl2_generators(small);
  const int zeta = big.pow(big.primitive(), (q + 1) / 2);  // order 2(q-1)
  std::vector<SemilinearMap> gens = sl;
  gens.push_back({Mat2{zeta, 0, 0, big.inv(zeta)}, 0});
  const std::string name = "SL(2," + qs(q) + ").2Q";
  LinearAction act(big, gens, kE1, false, name);
  Group g = act.group();
  Group base = generated_by(act, sl, "SL(2," + qs(q) + ")");
  if (g.order() != 2 * base.order()) throw Corruption("sl2_q_extension: unexpected order");
  return Example{g, base, std::nullopt, std::nullopt};
}

Example sl2_sd_extension(int q) {
  if (q != 3 && q != 5 && q != 7) throw InvalidArgument("sl2_sd_extension: q must be 3, 5 or 7");
  FiniteField f(q);
  int c = 1;
  while (f.is_square(f.neg(c))) ++c;
  const Mat2 g{0, c, 1, 0};
  const Mat2 ginv{0, 1, f.inv(c), 0};
  LinearAction act(f, sl2_generators(f), kE1, false, "SL(2," + qs(q) + ")");
  const Group& base = act.group();
  auto alpha = [&](const Perm& x) {
    return act.perm_of({mat_mul(f, mat_mul(f, ginv, act.matrix_of(x)), g), 0});
  };
  Group ext = semidirect(base, alpha, "SL(2," + qs(q) + ").2SD");
  std::vector<Perm> bgens(ext.generators().begin(), ext.generators().end() - 1);
  Group b = Group::generate(bgens, base.name());
  return Example{ext, b, std::nullopt, std::nullopt};
}

namespace {

std::vector<Example> pgammal_index2(int q) {
  FiniteField f(q);
  if (f.degree() != 2 || f.p() == 2) throw InvalidArgument("q must be the square of an odd prime");
  auto sl = sl2_generators(f);
  const int w = f.primitive();
  const std::vector<SemilinearMap> extra{{Mat2{w, 0, 0, 1}, 0}, {Mat2{1, 0, 0, 1}, 1}, {Mat2{w, 0, 0, 1}, 1}};
  const std::vector<std::string> names{"PGL(2," + qs(q) + ")", "PSL(2," + qs(q) + ").2sigma",
                                       "PGLstar(" + qs(q) + ")"};
  std::vector<Example> out;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    auto gens = sl;
    gens.push_back(extra[i]);
    LinearAction act(f, gens, kE1, true, names[i]);
    Group base = generated_by(act, sl, "PSL(2," + qs(q) + ")");
    if (act.group().order() != 2 * base.order()) throw Corruption("PGammaL index-2 subgroup of wrong order");
    out.push_back(Example{act.group(), base, std::nullopt, std::nullopt});
  }
  return out;
}

}  // namespace

Example pgl_star(int q) {
  // Selected by its Sylow 2-subgroup: semidihedral, unlike the other two.
  for (Example& ex : pgammal_index2(q)) {
    Group p = sylow2(ex.group);
    if (p.order() <= 64 && iso_type_2group(p).label.rfind("SD", 0) == 0) return ex;
  }
  throw Corruption("pgl_star: no index-2 subgroup with semidihedral Sylow 2-subgroup");
}

Example semilinear_psl(int q) { return pgammal_index2(q)[1]; }

Example pgl_with_base(int q) {
  FiniteField f(q);
  auto sl = sl2_generators(f);
  auto gens = sl;
  gens.push_back({Mat2{f.primitive(), 0, 0, 1}, 0});
  LinearAction act(f, gens, kE1, true, "PGL(2," + qs(q) + ")");
  Group base = generated_by(act, sl, "PSL(2," + qs(q) + ")");
  return Example{act.group(), base, std::nullopt, std::nullopt};
}

Group homocyclic_h() { return affine_group(4, 2, {{0, -1, 1, -1}}, "C4^2:C3"); }

Group homocyclic_s3() { return affine_group(4, 2, {{0, -1, 1, -1}, {0, 1, 1, 0}}, "C4^2:S3"); }

}  // namespace fsind
