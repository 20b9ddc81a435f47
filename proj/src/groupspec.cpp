#include "fsind/groupspec.hpp"

#include <cctype>
#include <functional>

#include "fsind/errors.hpp"
#include "fsind/factory.hpp"

namespace fsind {

namespace {

using Kind = SpecNode::Kind;

const std::vector<std::string> kKnownNames{"C4:C4", "C8:C4", "C4:C8", "C4:Q8", "C8:C2^2", "C4^2:C3", "C4^2:S3"};

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(text[i]);
        origin_.push_back(i);
      }
  }

  SpecNode parse() {
    if (s_.empty()) fail("empty groupspec");
    SpecNode n = expr();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    const std::size_t at = i_ < origin_.size() ? origin_[i_] : (origin_.empty() ? 0 : origin_.back() + 1);
    throw InvalidArgument("groupspec position " + std::to_string(at) + ": " + msg);
  }
  std::size_t here() const { return i_ < origin_.size() ? origin_[i_] : 0; }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  int number() {
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a number");
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return static_cast<int>(v);
  }
  std::string word() {
    std::string w;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      // A lowercase 'x' after a complete word is the product operator.
      if (s_[i_] == 'x' && !w.empty() && w != "fi") break;
      w.push_back(s_[i_++]);
    }
    return w;
  }
  std::string ident() {
    std::string w;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '^' ||
                              s_[i_] == '_' || s_[i_] == '-'))
      w.push_back(s_[i_++]);
    if (w.empty()) fail("expected a name");
    return w;
  }

  SpecNode expr() {
    SpecNode left = term();
    while (peek('x') || peek('*')) {
      const std::size_t p = here();
      const Kind k = s_[i_] == 'x' ? Kind::Product : Kind::Central;
      ++i_;
      SpecNode right = term();
      SpecNode n;
      n.kind = k;
      n.pos = p;
      n.children = {std::move(left), std::move(right)};
      left = std::move(n);
    }
    return left;
  }

  SpecNode postfixed() {
    SpecNode n = primary();
    for (;;) {
      if (peek('^')) {
        const std::size_t p = here();
        ++i_;
        SpecNode pw;
        pw.kind = Kind::Power;
        pw.pos = p;
        pw.args = {number()};
        if (pw.args[0] < 1) fail("power must be positive");
        pw.children = {std::move(n)};
        n = std::move(pw);
      } else if (peek('.')) {
        const std::size_t p = here();
        ++i_;
        expect('2');
        std::string tag;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) tag.push_back(s_[i_++]);
        if (tag != "sigma" && tag != "Q" && tag != "SD") fail("unknown extension '.2" + tag + "'");
        SpecNode e;
        e.kind = Kind::Extension;
        e.pos = p;
        e.name = tag;
        e.children = {std::move(n)};
        n = std::move(e);
      } else {
        return n;
      }
    }
  }

  SpecNode term() {
    const std::size_t start = i_;
    SpecNode n = postfixed();
    if (!peek(':')) return n;
    ++i_;
    postfixed();
    const std::string text = s_.substr(start, i_ - start);
    for (const auto& known : kKnownNames)
      if (known == text) {
        SpecNode k;
        k.kind = Kind::Named;
        k.pos = origin_[start];
        k.name = known;
        return k;
      }
    i_ = start;
    fail("unknown semidirect product '" + text + "'");
  }

  SpecNode primary() {
    const std::size_t p = here();
    if (peek('(')) {
      ++i_;
      SpecNode n = expr();
      expect(')');
      return n;
    }
    const std::string w = word();
    if (w.empty()) fail("expected a group");
    SpecNode n;
    n.pos = p;
    if (w == "FR" || w == "wr") {
      n.kind = w == "FR" ? Kind::FR : Kind::Wreath;
      expect('(');
      n.children.push_back(expr());
      expect(',');
      n.children.push_back(expr());
      expect(')');
      return n;
    }
    if (w == "sd") {
      expect('(');
      SpecNode base = expr();
      expect(';');
      const std::string action = ident();
      expect(')');
      return sd_node(std::move(base), action, p);
    }
    if (w == "fixture") {
      n.kind = Kind::Fixture;
      expect('(');
      n.name = ident();
      expect(')');
      return n;
    }
    n.kind = Kind::Atom;
    n.name = w;
    if (w == "PSL" || w == "PGL" || w == "SL" || w == "GL") {
      expect('(');
      if (number() != 2) fail("only dimension 2 is supported");
      expect(',');
      n.args = {number()};
      expect(')');
    } else if (w == "PGLstar") {
      expect('(');
      n.args = {number()};
      expect(')');
    } else if (w == "Hol") {
      expect('(');
      if (word() != "C" || number() != 8) fail("only Hol(C8) is supported");
      expect(')');
      n.args = {8};
    } else if (w == "C" || w == "D" || w == "Q" || w == "SD" || w == "M" || w == "S" || w == "A") {
      if (peek('(')) {
        ++i_;
        n.args = {number()};
        expect(')');
      } else {
        n.args = {number()};
      }
    } else {
      i_ -= w.size();
      fail("unknown group '" + w + "'");
    }
    return n;
  }

  SpecNode sd_node(SpecNode base, const std::string& action, std::size_t p) {
    const std::string b = base.to_string();
    SpecNode n;
    n.pos = p;
    if (b == "C4^2" && (action == "C3" || action == "S3")) {
      n.kind = Kind::Named;
      n.name = "C4^2:" + action;
      return n;
    }
    n.kind = Kind::Extension;
    if (action == "diag") n.name = "Q";
    else if (action == "alpha") n.name = "SD";
    else if (action == "sigma") n.name = "sigma";
    else fail("unknown action '" + action + "'");
    n.children = {std::move(base)};
    return n;
  }

  std::string s_;
  std::vector<std::size_t> origin_;
  std::size_t i_ = 0;
};

Example plain(Group g) { return Example{std::move(g), std::nullopt, std::nullopt, std::nullopt}; }

void check_order(const Group& g, const EvalOptions& opts) {
  if (g.order() > opts.max_order)
    throw TooLarge(g.name() + " has order " + std::to_string(g.order()) + " above the limit");
}

Example atom(const SpecNode& n) {
  const std::string label = n.to_string();
  const int a = n.args.at(0);
  auto pow2 = [&](int lo) {
    if (a < lo || (a & (a - 1)) != 0) throw InvalidArgument(label + ": order must be a power of 2 >= " + std::to_string(lo));
  };
  if (n.name == "C") {
    if (a < 1) throw InvalidArgument("C(n) needs n >= 1");
    if (a == 1) return plain(Group::trivial(1).with_name(label));
    return plain(cyclic(a).with_name(label));
  }
  if (n.name == "D") {
    if (a < 4 || a % 2) throw InvalidArgument("D(n) needs even n >= 4");
    return plain(dihedral(a).with_name(label));
  }
  if (n.name == "Q") { pow2(8); return plain(quaternion(a).with_name(label)); }
  if (n.name == "SD") { pow2(16); return plain(semidihedral(a).with_name(label)); }
  if (n.name == "M") { pow2(16); return plain(modular(a).with_name(label)); }
  if (n.name == "S" || n.name == "A") {
    if (a < 2 || a > 9) throw InvalidArgument(label + ": degree out of range");
    if (n.name == "A" && a < 3) return plain(Group::trivial(1).with_name(label));
    Group g = n.name == "S" ? symmetric(a) : alternating(a);
    // A(n) has the index-2 base tracked for S(n).
    if (n.name == "S") return Example{g.with_name(label), alternating(a), std::nullopt, std::nullopt};
    return plain(g.with_name(label));
  }
  if (n.name == "PSL") return plain(psl2(a).with_name(label));
  if (n.name == "SL") return plain(sl2(a).with_name(label));
  if (n.name == "GL") return plain(gl2(a).with_name(label));
  if (n.name == "PGL") {
    Example e = pgl_with_base(a);
    e.group = e.group.with_name(label);
    return e;
  }
  if (n.name == "PGLstar") {
    Example e = pgl_star(a);
    e.group = e.group.with_name(label);
    return e;
  }
  if (n.name == "Hol") return plain(affine_group(8, 1, {{3}, {5}}, label));
  throw InvalidArgument("unknown group '" + n.name + "'");
}

Example named(const std::string& name) {
  if (name == "C4:C4") return plain(metacyclic(4, 4, 3, 0, name));
  if (name == "C8:C4") return plain(metacyclic(8, 4, 5, 0, name));
  if (name == "C4:C8") return plain(metacyclic(4, 8, 3, 0, name));
  if (name == "C4:Q8") return plain(abelian_extension({4, 4}, {3, 0, 0, 3}, 2, {2, 0}, name));
  if (name == "C8:C2^2") return plain(affine_group(8, 1, {{3}, {5}}, name));
  if (name == "C4^2:C3") return plain(homocyclic_h());
  if (name == "C4^2:S3") return Example{homocyclic_s3(), homocyclic_h(), std::nullopt, std::nullopt};
  throw InvalidArgument("unknown group '" + name + "'");
}

}  // namespace

std::string SpecNode::to_string() const {
  switch (kind) {
    case Kind::Atom:
      if (name == "PSL" || name == "PGL" || name == "SL" || name == "GL")
        return name + "(2," + std::to_string(args[0]) + ")";
      if (name == "PGLstar") return name + "(" + std::to_string(args[0]) + ")";
      if (name == "Hol") return "Hol(C8)";
      return name + std::to_string(args[0]);
    case Kind::Product:
      return children[0].to_string() + "x" + children[1].to_string();
    case Kind::Central:
      return children[0].to_string() + "*" + children[1].to_string();
    case Kind::Power: {
      std::string inner = children[0].to_string();
      if (children[0].kind == Kind::Product || children[0].kind == Kind::Central) inner = "(" + inner + ")";
      return inner + "^" + std::to_string(args[0]);
    }
    case Kind::Extension:
      return children[0].to_string() + ".2" + name;
    case Kind::Named:
      return name;
    case Kind::FR:
      return "FR(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Wreath:
      return "wr(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Fixture:
      return "fixture(" + name + ")";
  }
  return {};
}

SpecNode parse_groupspec(const std::string& text) { return Parser(text).parse(); }

Example evaluate(const SpecNode& n, const EvalOptions& opts) {
  const std::string label = n.to_string();
  Example out = plain(Group::trivial(1));
  switch (n.kind) {
    case Kind::Atom:
      out = atom(n);
      break;
    case Kind::Named:
      out = named(n.name);
      break;
    case Kind::Fixture: {
      auto it = opts.fixtures.find(n.name);
      if (it == opts.fixtures.end()) throw NotMember("fixture '" + n.name + "' not loaded");
      out = plain(it->second);
      break;
    }
    case Kind::Product: {
      Example a = evaluate(n.children[0], opts), b = evaluate(n.children[1], opts);
      if (a.group.order() * b.group.order() > opts.max_order) throw TooLarge(label + " exceeds the order limit");
      out = plain(direct_product(a.group, b.group, label));
      // H x C2 remembers H.
      if (b.group.order() == 2) out.base = pad_degree(a.group, b.group.degree());
      break;
    }
    case Kind::Central: {
      Example a = evaluate(n.children[0], opts), b = evaluate(n.children[1], opts);
      out = plain(central_product(a.group, b.group, label));
      break;
    }
    case Kind::Power: {
      Example a = evaluate(n.children[0], opts);
      Group g = a.group;
      for (int k = 1; k < n.args[0]; ++k) {
        if (g.order() * a.group.order() > opts.max_order) throw TooLarge(label + " exceeds the order limit");
        g = direct_product(g, a.group);
      }
      out = plain(g.with_name(label));
      break;
    }
    case Kind::Extension: {
      const SpecNode& c = n.children[0];
      const bool sl = c.kind == Kind::Atom && c.name == "SL";
      const bool psl = c.kind == Kind::Atom && c.name == "PSL";
      if (n.name == "Q" && sl) out = sl2_q_extension(c.args[0]);
      else if (n.name == "SD" && sl) out = sl2_sd_extension(c.args[0]);
      else if (n.name == "sigma" && psl) out = semilinear_psl(c.args[0]);
      else throw InvalidArgument("extension .2" + n.name + " is not defined for " + c.to_string());
      out.group = out.group.with_name(label);
      break;
    }
    case Kind::FR: {
      Example h = evaluate(n.children[0], opts);
      Example hhat = evaluate(n.children[1], opts);
      if (3 * hhat.group.order() > opts.max_order) throw TooLarge(label + " exceeds the order limit");
      Group inner = locate_index2(h.group, hhat);
      out = fong_reynolds(inner.with_name(h.group.name()), hhat.group);
      out.group = out.group.with_name(label);
      break;
    }
    case Kind::Wreath: {
      const SpecNode& a = n.children[0];
      const SpecNode& b = n.children[1];
      if (a.kind != Kind::Atom || a.name != "C" || b.kind != Kind::Atom || b.name != "C" || b.args[0] != 2)
        throw InvalidArgument("wr supports C(m) wr C(2) only");
      out = plain(wreath_cyclic_c2(a.args[0]).with_name(label));
      break;
    }
  }
  check_order(out.group, opts);
  return out;
}

Example build_groupspec(const std::string& text, const EvalOptions& opts) {
  return evaluate(parse_groupspec(text), opts);
}

}  // namespace fsind
