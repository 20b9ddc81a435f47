#include "fsind/registry.hpp"

#include <algorithm>

#include "fsind/errors.hpp"

namespace fsind {

namespace {

ExpectedRow dihedral(std::string table, std::string key, std::string spec, std::string expected, std::string d,
                     std::string e, int l, std::string source) {
  ExpectedRow r;
  r.table = std::move(table);
  r.key = std::move(key);
  r.groupspec = std::move(spec);
  r.kind = RowKind::Dihedral;
  r.expected = std::move(expected);
  r.d_type = std::move(d);
  r.e_type = std::move(e);
  r.l = l;
  r.source = std::move(source);
  return r;
}

std::vector<ExpectedRow> main_d3() {
  const std::string t = "main-d3";
  const std::string nil = "dihedral table, nilpotent class";
  return {
      dihedral(t, "D8 nilpotent, E=D", "D8", "1,1,1,1;1", "D8", "D8", 1, nil),
      dihedral(t, "D8 nilpotent, E=DxC2", "FR(D8,D8xC2)", "1,1,1,1;1", "D8", "D8xC2", 1, nil),
      dihedral(t, "D8 nilpotent, E=D*C4", "FR(D8,D8*C4)", "1,1,1,1;-1", "D8", "D8*C4", 1, nil),
      dihedral(t, "D8 nilpotent, E=D16", "FR(D8,D16)", "0,0,1,1;1", "D8", "D16", 1, nil),
      dihedral(t, "D8 nilpotent, E=SD16", "FR(D8,SD16)", "0,0,1,1;-1", "D8", "SD16", 1, nil),
      dihedral(t, "PGL(2,5), E=D", "PGL(2,5)", "1,1,1,1;1", "D8", "D8", 2, "dihedral table, PGL(2,q) with |q-1|_2 = 2^(d-1)"),
      dihedral(t, "PGL(2,5), E=DxC2", "FR(PGL(2,5),PGL(2,5)xC2)", "1,1,1,1;1", "D8", "D8xC2", 2,
               "dihedral table, PGL(2,q) with |q-1|_2 = 2^(d-1)"),
      dihedral(t, "PGL(2,3), E=D", "PGL(2,3)", "1,1,1,1;1", "D8", "D8", 2, "dihedral table, PGL(2,q) with |q+1|_2 = 2^(d-1)"),
      dihedral(t, "PGL(2,3), E=DxC2", "FR(PGL(2,3),PGL(2,3)xC2)", "1,1,1,1;1", "D8", "D8xC2", 2,
               "dihedral table, PGL(2,q) with |q+1|_2 = 2^(d-1)"),
      dihedral(t, "PSL(2,9), E=D", "PSL(2,9)", "1,1,1,1;1", "D8", "D8", 3, "dihedral table, PSL(2,q) with |q-1|_2 = 2^d"),
      dihedral(t, "PSL(2,9), E=DxC2", "FR(PSL(2,9),PSL(2,9)xC2)", "1,1,1,1;1", "D8", "D8xC2", 3,
               "dihedral table, PSL(2,q) with |q-1|_2 = 2^d"),
      dihedral(t, "PSL(2,9), E=D16", "FR(PSL(2,9),PGL(2,9))", "0,0,1,1;1", "D8", "D16", 3,
               "dihedral table, PSL(2,q) with |q-1|_2 = 2^d"),
      dihedral(t, "PSL(2,9), E=SD16", "FR(PSL(2,9),PGLstar(9))", "0,0,1,1;-1", "D8", "SD16", 3,
               "dihedral table, PSL(2,q) with |q-1|_2 = 2^d"),
      dihedral(t, "PSL(2,7), E=D", "PSL(2,7)", "0,0,1,1;1", "D8", "D8", 3, "dihedral table, PSL(2,q) with |q+1|_2 = 2^d"),
      dihedral(t, "PSL(2,7), E=DxC2", "FR(PSL(2,7),PSL(2,7)xC2)", "0,0,1,1;1", "D8", "D8xC2", 3,
               "dihedral table, PSL(2,q) with |q+1|_2 = 2^d"),
      dihedral(t, "PSL(2,7), E=D16", "FR(PSL(2,7),PGL(2,7))", "1,1,1,1;1", "D8", "D16", 3,
               "dihedral table, PSL(2,q) with |q+1|_2 = 2^d"),
      dihedral(t, "A7, E=D", "A7", "1,1,1,1;1", "D8", "D8", 3, "dihedral table, A7 class"),
      dihedral(t, "A7, E=DxC2", "FR(A7,A7xC2)", "1,1,1,1;1", "D8", "D8xC2", 3, "dihedral table, A7 class"),
  };
}

std::vector<ExpectedRow> main_d4() {
  const std::string t = "main-d4";
  const std::string nil = "dihedral table, nilpotent class";
  return {
      dihedral(t, "D16 nilpotent, E=D", "D16", "1,1,1,1;1", "D16", "D16", 1, nil),
      dihedral(t, "D16 nilpotent, E=DxC2", "FR(D16,D16xC2)", "1,1,1,1;1", "D16", "D16xC2", 1, nil),
      dihedral(t, "D16 nilpotent, E=D*C4", "FR(D16,D16*C4)", "1,1,1,1;-1", "D16", "D16*C4", 1, nil),
      dihedral(t, "D16 nilpotent, E=D32", "FR(D16,D32)", "0,0,1,1;1", "D16", "D32", 1, nil),
      dihedral(t, "D16 nilpotent, E=SD32", "FR(D16,SD32)", "0,0,1,1;-1", "D16", "SD32", 1, nil),
      dihedral(t, "D16 nilpotent, E=C8:C2^2", "FR(D16,Hol(C8))", "1,1,1,1;0", "D16", "C8:C2^2", 1, nil),
      dihedral(t, "PSL(2,17), E=D", "PSL(2,17)", "1,1,1,1;1", "D16", "D16", 3, "dihedral table, PSL(2,q) with |q-1|_2 = 2^d"),
      dihedral(t, "PGL(2,9), E=D", "PGL(2,9)", "1,1,1,1;1", "D16", "D16", 2, "dihedral table, PGL(2,q) with |q-1|_2 = 2^(d-1)"),
      // Transcribed as stated for the PGL(2,9)* and semilinear recipes; the
      // groups these recipes produce do not have D16 defect groups.
      dihedral(t, "PGL(2,9)* principal, PSL(2,q) class with E=SD32", "PGLstar(9)", "0,0,1,1;-1", "D16", "", 0,
               "dihedral table, PSL(2,q) with |q-1|_2 = 2^d, E = SD"),
      dihedral(t, "PSL(2,9):<sigma> principal, E=C8:C2^2", "PSL(2,9).2sigma", "1,1,1,1;0", "D16", "", 0,
               "dihedral table, PSL(2,q) with |q-1|_2 = 2^d, E = C_(2^(d-1)):C2^2"),
  };
}

ExpectedRow full(std::string key, std::string spec, std::string expected, std::string e, int l) {
  ExpectedRow r;
  r.table = "q8";
  r.key = std::move(key);
  r.groupspec = std::move(spec);
  r.kind = RowKind::Full;
  r.expected = std::move(expected);
  r.d_type = "Q8";
  r.e_type = std::move(e);
  r.l = l;
  r.source = "quaternion table with E in {Q16, SD16}";
  return r;
}

std::vector<ExpectedRow> q8() {
  return {
      full("E=Q16, nilpotent", "FR(Q8,Q16)", "0,0,1,1;-1", "Q16", 1),
      full("E=Q16, SL(2,3)", "FR(SL(2,3),SL(2,3).2Q)", "1,1,1,1;-1,-1,-1", "Q16", 3),
      full("E=Q16, SL(2,5)", "FR(SL(2,5),SL(2,5).2Q)", "0,0,1,1;0,0,-1", "Q16", 3),
      full("E=SD16, nilpotent", "FR(Q8,SD16)", "0,0,1,1;1", "SD16", 1),
      full("E=SD16, SL(2,3)", "FR(SL(2,3),SL(2,3).2SD)", "1,1,1,1;1,1,1", "SD16", 3),
      full("E=SD16, SL(2,5)", "FR(SL(2,5),SL(2,5).2SD)", "0,0,1,1;0,0,1", "SD16", 3),
  };
}

std::vector<ExpectedRow> q8_h0() {
  struct Class {
    std::string morita, h, q16, sd16;
    int l;
  };
  const std::vector<Class> classes{{"D", "Q8", "Q16", "SD16", 1},
                                   {"SL(2,3)", "SL(2,3)", "SL(2,3).2Q", "SL(2,3).2SD", 3},
                                   {"SL(2,5)", "SL(2,5)", "SL(2,5).2Q", "SL(2,5).2SD", 3}};
  std::vector<ExpectedRow> rows;
  for (const Class& c : classes) {
    const std::vector<std::pair<std::string, std::string>> members{
        {c.h, "Q8"},
        {"FR(" + c.h + "," + c.h + "xC2)", "Q8xC2"},
        {"FR(" + c.h + "," + c.h + "*C4)", "D8*C4"},
        {"FR(" + c.h + "," + c.q16 + ")", "Q16"},
        {"FR(" + c.h + "," + c.sd16 + ")", "SD16"}};
    for (const auto& [spec, e] : members) {
      const bool big = e == "Q16" || e == "SD16";
      // Exactly two real height-0 characters iff l = 1 with E in {Q16, SD16},
      // or SL(2,3) with E outside, or SL(2,5) with E inside.
      const bool two = (c.l == 1 && big) || (c.morita == "SL(2,3)" && !big) || (c.morita == "SL(2,5)" && big);
      ExpectedRow r;
      r.table = "q8-h0";
      r.key = c.morita + ", E=" + e;
      r.groupspec = spec;
      r.kind = RowKind::RealHeight0;
      r.expected = two ? "exactly two" : "not two";
      r.d_type = "Q8";
      r.e_type = e;
      r.l = c.l;
      r.morita = c.morita;
      r.source = "classification of quaternion blocks with two real height-0 characters";
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

ExpectedRow homo(std::string key, std::string spec, std::string expected, std::string e, int l,
                 std::string fixture = {}) {
  ExpectedRow r;
  r.table = "homocyclic";
  r.key = std::move(key);
  r.groupspec = std::move(spec);
  r.kind = RowKind::TwoRational;
  r.expected = std::move(expected);
  r.d_type = "C4xC4";
  r.e_type = std::move(e);
  r.l = l;
  r.fixture = std::move(fixture);
  r.source = "homocyclic C4xC4 table";
  return r;
}

std::vector<ExpectedRow> homocyclic() {
  return {
      homo("l=1, E=D", "C4^2", "1,1,1,1;0^12", "C4xC4", 1),
      homo("l=1, id 21 (DxC2)", "FR(C4^2,C4^2xC2)", "1,1,1,1;0^12", "C4xC4xC2", 1),
      homo("l=1, id 24", "FR(C4^2,fixture(sg32_24))", "1,1,1,1;0^12", "", 1, "sg32_24"),
      homo("l=1, id 33", "FR(C4^2,fixture(sg32_33))", "1,1,1,1;0^12", "", 1, "sg32_33"),
      homo("l=1, id 3 (C8xC4)", "FR(C4^2,C8xC4)", "1,1,-1,-1;0^12", "C8xC4", 1),
      homo("l=1, id 4 (C8:C4)", "FR(C4^2,C8:C4)", "1,1,-1,-1;0^12", "C8:C4", 1),
      homo("l=1, id 25 (D8xC4)", "FR(C4^2,D8xC4)", "1,1,1,1;1,1,1,1,0^8", "D8xC4", 1),
      homo("l=1, id 31", "FR(C4^2,fixture(sg32_31))", "1,1,1,1;1,1,1,1,0^8", "", 1, "sg32_31"),
      homo("l=1, id 26 (Q8xC4)", "FR(C4^2,Q8xC4)", "1,1,1,1;-1,-1,-1,-1,0^8", "Q8xC4", 1),
      homo("l=1, id 32", "FR(C4^2,fixture(sg32_32))", "1,1,1,1;-1,-1,-1,-1,0^8", "", 1, "sg32_32"),
      homo("l=1, id 12 (C4:C8)", "FR(C4^2,C4:C8)", "1,1,-1,-1;1,1,-1,-1,0^8", "C4:C8", 1),
      homo("l=1, id 35 (C4:Q8)", "FR(C4^2,C4:Q8)", "1,1,1,1;1,1,1,1,(-1)^8", "C4:Q8", 1),
      homo("l=1, id 11 (C4wrC2)", "FR(C4^2,wr(C4,C2))", "1,1,0,0;1,1,0^10", "C4wrC2", 1),
      homo("l=1, id 34", "FR(C4^2,fixture(sg32_34))", "1^16", "", 1, "sg32_34"),
      homo("l=3, E=D", "C4^2:C3", "1,0,0,1;0,0,0,0", "C4xC4", 3),
      homo("l=3, id 21 (DxC2)", "FR(C4^2:C3,C4^2:C3xC2)", "1,0,0,1;0,0,0,0", "C4xC4xC2", 3),
      homo("l=3, id 33", "FR(C4^2:C3,fixture(hhat96_33))", "1,0,0,1;0,0,0,0", "", 3, "hhat96_33"),
      homo("l=3, id 11 (C4wrC2)", "FR(C4^2:C3,C4^2:S3)", "1,1,1,1;0,0,1,1", "C4wrC2", 3),
      homo("l=3, id 34", "FR(C4^2:C3,fixture(hhat96_34))", "1,0,0,1;1,1,1,1", "", 3, "hhat96_34"),
  };
}

}  // namespace

std::vector<std::string> table_ids() { return {"main-d3", "main-d4", "q8", "q8-h0", "homocyclic"}; }

std::vector<ExpectedRow> registry_rows(const std::string& table) {
  if (table == "main-d3") return main_d3();
  if (table == "main-d4") return main_d4();
  if (table == "q8") return q8();
  if (table == "q8-h0") return q8_h0();
  if (table == "homocyclic") return homocyclic();
  throw InvalidArgument("unknown table '" + table + "'");
}

std::vector<std::string> default_corpus() {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& id : table_ids())
    for (const auto& r : registry_rows(id))
      if (r.fixture.empty()) add(r.groupspec);
  for (const char* s : {"S4", "S5", "PSL(2,5)", "PSL(2,11)", "PSL(2,13)", "PGL(2,7)", "SL(2,7)", "Q16", "SD16"})
    add(s);
  return out;
}

}  // namespace fsind
