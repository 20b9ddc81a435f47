#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fsind/constructions.hpp"
#include "fsind/group.hpp"

namespace fsind {

// Groupspec grammar (whitespace is ignored):
//
//   expr    := term (('x' | '*') term)*          direct / central product
//   term    := primary post* (':' primary post*)?  ':' only for known names
//   post    := '^' int                            direct power
//            | '.2sigma' | '.2Q' | '.2SD'          the index-2 extensions
//   primary := '(' expr ')'
//            | 'FR' '(' expr ',' expr ')'
//            | 'wr' '(' expr ',' expr ')'         C_m wr C2 only
//            | 'sd' '(' expr ';' name ')'          named actions
//            | 'fixture' '(' name ')'
//            | atom
//   atom    := C(n) | Cn | D | Q | SD | M | S | A  (same two forms)
//            | PSL(2,q) | PGL(2,q) | SL(2,q) | GL(2,q) | PGLstar(q) | Hol(C8)
//
// Known ':' names: C4:C4, C8:C4, C4:C8, C4:Q8, C8:C2^2, C4^2:C3, C4^2:S3.
// sd actions: sd(SL(2,q);diag) = SL(2,q).2Q, sd(SL(2,q);alpha) =
// SL(2,q).2SD, sd(PSL(2,q);sigma) = PSL(2,q).2sigma, sd(C4^2;C3|S3).

struct SpecNode {
  enum class Kind { Atom, Product, Central, Power, Extension, Named, FR, Wreath, Fixture };
  Kind kind = Kind::Atom;
  std::string name;        // atom name, extension tag, known name, fixture name
  std::vector<int> args;   // atom parameters, power exponent
  std::vector<SpecNode> children;
  std::size_t pos = 0;     // offset in the source text

  std::string to_string() const;
};

/// Throws InvalidArgument naming the offending position.
SpecNode parse_groupspec(const std::string& text);

struct EvalOptions {
  std::size_t max_order = 100000;
  std::map<std::string, Group> fixtures;
};

Example evaluate(const SpecNode& node, const EvalOptions& opts = {});
Example build_groupspec(const std::string& text, const EvalOptions& opts = {});

}  // namespace fsind
