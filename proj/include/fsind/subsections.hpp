#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsind/blocks.hpp"
#include "fsind/chartab.hpp"
#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// A B-subsection (x, b): x a 2-element class representative of G and b a
/// block of C_G(x) whose Brauer correspondent is B.
struct Subsection {
  Perm x;
  std::size_t x_class = 0;
  std::size_t x_order = 1;
  std::shared_ptr<const CharacterTable> local;  // table of C_G(x)
  BlockData block;                              // b, lambda under G's reduction
  DefectPair pair;                              // (D_b, E_b); E_b = D_b unless b is real
  int l() const { return block.l; }
};

/// Brauer character and projective indecomposable of an l = 1 block.
struct BrauerData {
  std::size_t psi = 0;          // height-0 character of b giving phi
  ClassFunction phi;            // zero off the odd-order classes of C_G(x)
  ClassFunction Phi;            // sum of mult[i] * chars[i]
  std::vector<long long> mult;  // parallel to b.chars
};

struct GenDecompColumn {
  std::size_t subsection = 0;
  BrauerData brauer;
  std::vector<CyclotomicNumber> d;  // parallel to B.chars
  long long eps_Phi = 0;
};

/// One entry per G-class of 2-elements x and block b of C_G(x) with b^G = B;
/// ordered by class of x, then block of C_G(x). Asserts k(B) = sum l(b).
std::vector<Subsection> enumerate_subsections(const CharacterTable& t, const BlockData& B,
                                              const Mod2Reduction& red);

/// Requires l(b) = 1; asserts every character of b restricts to an integer
/// multiple of phi on odd-order elements.
BrauerData l1_brauer_data(const Subsection& s);

/// d^x_chi = (1/|C|) sum_{u odd in C} chi(xu) conj(Phi(u)), asserted to lie
/// in Z[zeta_{o(x)}] with Cartan norm |D_b|.
GenDecompColumn gen_decomp_column(const CharacterTable& t, const BlockData& B,
                                  const std::vector<Subsection>& subs, std::size_t index);

/// sum eps(chi) d_chi; throws TheoryViolation unless a non-negative integer.
long long eps_Phi(const CharacterTable& t, const BlockData& B, const std::vector<CyclotomicNumber>& d);

/// Columns for every subsection with l(b) = 1.
std::vector<GenDecompColumn> all_columns(const CharacterTable& t, const BlockData& B,
                                         const std::vector<Subsection>& subs);

struct CheckResult {
  std::string check;
  std::size_t block = 0;
  std::string status;  // pass | fail | skipped
  nlohmann::json lhs, rhs, witness;
};
nlohmann::json check_to_json(const std::string& groupspec, const CheckResult& r);

/// Pairwise orthogonality of the computed columns and their Cartan norms.
CheckResult column_orthogonality_check(const BlockData& B, const std::vector<Subsection>& subs,
                                       const std::vector<GenDecompColumn>& cols);

/// Nonnegativity, the vanishing clause and, for |G| <= 10^4, the
/// permutation-character multiplicity, per column. B must be real.
std::vector<CheckResult> lemphix_checks(const CharacterTable& t, const BlockData& B, const DefectPair& pair,
                                        const std::vector<Subsection>& subs,
                                        const std::vector<GenDecompColumn>& cols);

/// Positions of x in D whose stored correspondent pair matches
/// (C_D(x'), C_E(x')) up to C_G(x')-conjugacy.
std::vector<Perm> compatible_positions(const CharacterTable& t, const DefectPair& pair, const Subsection& s);

/// eps(Phi^x) = #{e in E \ D : e^2 = x} for B real non-principal, l(b) = 1,
/// C_D(x) abelian; skipped when a hypothesis fails.
CheckResult locnil_check(const CharacterTable& t, const BlockData& B, const DefectPair& pair,
                         const Subsection& s, const GenDecompColumn* col);

/// Conjecture checks for a real non-principal block (conC and conNew need
/// l(B) = 1; the local version runs on every locnil-applicable subsection).
std::vector<CheckResult> conjecture_checks(const CharacterTable& t, const BlockData& B, const DefectPair& pair,
                                           const std::vector<Subsection>& subs,
                                           const std::vector<GenDecompColumn>& cols);

/// Fits the five nontrivial columns of a C4^2-defect block with l = 3 to the
/// displayed generalized decomposition matrix up to signs, column pairing
/// and row order.
CheckResult homocyclic_gendecomp_check(const CharacterTable& t, const BlockData& B,
                                       const std::vector<Subsection>& subs,
                                       const std::vector<GenDecompColumn>& cols);

}  // namespace fsind
