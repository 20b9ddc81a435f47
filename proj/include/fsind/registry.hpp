#pragma once

#include <string>
#include <vector>

namespace fsind {

/// How the indicator vector of a row is read off its block.
enum class RowKind {
  Dihedral,     // eps of the four height-0 characters ; mu of the height-1 family
  Full,         // eps of the height-0 characters ; eps of the height-1 characters
  TwoRational,  // eps of the 2-rational characters ; eps of the others
  RealHeight0,  // whether exactly two height-0 characters are real
};

/// One expected row. Indicator strings use the printed notation
/// ("1,1,0,0;1", "0^12", "(-1)^8"); within each part the order is
/// irrelevant because the labelling of characters is not canonical.
struct ExpectedRow {
  std::string table;
  std::string key;
  std::string groupspec;
  RowKind kind = RowKind::Dihedral;
  std::string expected;
  std::string d_type;  // empty: not checked
  std::string e_type;  // empty: not checked
  int l = 0;           // 0: not checked
  std::string morita;  // RealHeight0 rows: "D", "SL(2,3)" or "SL(2,5)"
  std::string fixture; // non-empty: row needs this fixture
  std::string source;  // where in the tables the row comes from
};

std::vector<std::string> table_ids();
/// Throws InvalidArgument for an unknown id.
std::vector<ExpectedRow> registry_rows(const std::string& table);

/// Built-in scan corpus: every non-fixture registry group plus further
/// PSL/PGL/SL examples.
std::vector<std::string> default_corpus();

}  // namespace fsind
