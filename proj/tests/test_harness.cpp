#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fsind/errors.hpp"
#include "fsind/harness.hpp"
#include "fsind/registry.hpp"

using namespace fsind;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("fsind-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Signature, ParseAndFormat) {
  EXPECT_EQ(parse_signature("1,1,0,0;1"), (Signature{{1, 1, 0, 0}, {1}}));
  EXPECT_EQ(parse_signature("1,1,1,1;0^12")[1].size(), 12u);
  EXPECT_EQ(parse_signature("1,1,1,1;1,1,1,1,(-1)^8")[1], (std::vector<int>{1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(parse_signature("1^16").size(), 1u);
  EXPECT_EQ(canonical(parse_signature("0,0,1,1;-1")), canonical(parse_signature("1,0,1,0;-1")));
  EXPECT_EQ(format_signature(canonical(parse_signature("0^12,1,1"))), "1,1,0^12");
  EXPECT_THROW(parse_signature("1,2"), InvalidArgument);
  EXPECT_THROW(parse_signature("a"), InvalidArgument);
}

TEST(Registry, Tables) {
  EXPECT_EQ(registry_rows("main-d3").size(), 18u);
  EXPECT_EQ(registry_rows("main-d4").size(), 10u);
  EXPECT_EQ(registry_rows("q8").size(), 6u);
  EXPECT_EQ(registry_rows("q8-h0").size(), 15u);
  EXPECT_EQ(registry_rows("homocyclic").size(), 19u);
  EXPECT_THROW(registry_rows("nope"), InvalidArgument);
  for (const auto& id : table_ids())
    for (const auto& r : registry_rows(id)) {
      EXPECT_FALSE(r.source.empty());
      if (r.kind != RowKind::RealHeight0) EXPECT_NO_THROW(parse_signature(r.expected));
      EXPECT_NO_THROW(parse_groupspec(r.groupspec)) << r.groupspec;
    }
  auto corpus = default_corpus();
  EXPECT_GT(corpus.size(), 40u);
  for (const auto& s : corpus) EXPECT_EQ(s.find("fixture"), std::string::npos);
}

TEST(Rows, Evaluate) {
  HarnessOptions opts;
  for (const auto& r : registry_rows("q8")) {
    RowResult res = evaluate_row(r, opts);
    EXPECT_EQ(res.status, "pass") << r.key;
  }
  ExpectedRow wrong = registry_rows("main-d3").front();
  wrong.expected = "0,0,1,1;1";
  EXPECT_EQ(evaluate_row(wrong, opts).status, "fail");
  ExpectedRow fixture = registry_rows("homocyclic")[2];
  ASSERT_FALSE(fixture.fixture.empty());
  EXPECT_EQ(evaluate_row(fixture, opts).status, "skipped");
  ExpectedRow broken = wrong;
  broken.groupspec = "FR(D8,";
  EXPECT_EQ(evaluate_row(broken, opts).status, "error");
}

TEST(Rows, DihedralSignatureFamily) {
  HarnessOptions opts;
  Analysis a = analyze("PSL(2,17)", opts);
  Signature s = block_signature(*a.table, a.blocks[a.designated], RowKind::Dihedral);
  EXPECT_EQ(canonical(s), (Signature{{1, 1, 1, 1}, {1}}));
  Analysis b = analyze("FR(D16,D16*C4)", opts);
  EXPECT_EQ(block_signature(*b.table, b.blocks[b.designated], RowKind::Dihedral)[1], (std::vector<int>{-1}));
}

TEST(Report, DeterministicJson) {
  HarnessOptions opts;
  const std::string a = run_table("q8", opts).to_json().dump();
  const std::string b = run_table("q8", opts).to_json().dump();
  EXPECT_EQ(a, b);
  HarnessOptions other = opts;
  other.seed = 99;
  other.jobs = 3;
  RunReport r = run_table("q8", other);
  EXPECT_EQ(r.to_json()["rows"].dump(), nlohmann::json::parse(a)["rows"].dump());
}

TEST(Report, ExitCodes) {
  RunReport r;
  r.command = "table";
  EXPECT_EQ(r.exit_code(), 0);
  RowResult ok;
  ok.status = "skipped";
  r.rows.push_back(ok);
  EXPECT_EQ(r.exit_code(), 0);
  RowResult bad;
  bad.status = "fail";
  r.rows.push_back(bad);
  EXPECT_EQ(r.exit_code(), 1);
  RowResult err;
  err.status = "error";
  r.rows.push_back(err);
  EXPECT_EQ(r.exit_code(), 2);
  RunReport s;
  s.command = "scan";
  GroupScan g;
  g.status = "finding";
  s.groups.push_back(g);
  EXPECT_EQ(s.exit_code(), 1);
}

TEST(Cache, MatchesFreshComputation) {
  fs::path dir = fresh_dir("cache");
  HarnessOptions opts;
  opts.cache_dir = dir;
  for (const char* spec : {"SL(2,3)", "FR(D8,SD16)", "PSL(2,7)"}) {
    Analysis first = analyze(spec, opts);
    ASSERT_TRUE(fs::exists(TableCache(dir).file_for(spec)));
    Analysis second = analyze(spec, opts);
    Analysis fresh = analyze(spec, HarnessOptions{});
    EXPECT_EQ(second.table->to_json(spec).dump(), fresh.table->to_json(spec).dump());
    EXPECT_EQ(second.designated, fresh.designated);
  }
  // A damaged entry is recomputed and replaced.
  const fs::path f = TableCache(dir).file_for("SL(2,3)");
  std::ofstream(f) << "{not json";
  Analysis again = analyze("SL(2,3)", opts);
  EXPECT_EQ(again.table->num_chars(), 7u);
  EXPECT_TRUE(TableCache(dir).load("SL(2,3)", again.example.group).has_value());
  for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().extension(), ".json");
  fs::remove_all(dir);
}

TEST(Scan, CorpusParsing) {
  auto c = parse_corpus("# comment\n\nPSL(2,7)   # trailing\n  FR(D8,D16)\n");
  EXPECT_EQ(c, (std::vector<std::string>{"PSL(2,7)", "FR(D8,D16)"}));
  RunReport empty = run_scan({}, CheckSelection{}, HarnessOptions{});
  EXPECT_EQ(empty.exit_code(), 0);
  EXPECT_TRUE(empty.to_json()["groups"].empty());
}

TEST(Scan, SingleGroup) {
  GroupScan g = scan_group("PSL(2,7)", CheckSelection::parse("lemphix"), HarnessOptions{});
  EXPECT_EQ(g.status, "pass");
  std::size_t nonneg = 0;
  for (const auto& c : g.checks) {
    EXPECT_TRUE(c.check.rfind("lemPhix", 0) == 0) << c.check;
    if (c.check == "lemPhix-nonneg") {
      ++nonneg;
      EXPECT_EQ(c.status, "pass");
    }
  }
  EXPECT_GT(nonneg, 0u);
  GroupScan full = scan_group("FR(D8,SD16)", CheckSelection{}, HarnessOptions{});
  EXPECT_EQ(full.status, "pass");
  GroupScan err = scan_group("FR(D8,", CheckSelection{}, HarnessOptions{});
  EXPECT_EQ(err.status, "error");
  EXPECT_THROW(CheckSelection::parse("bogus"), InvalidArgument);
  EXPECT_TRUE(is_conjecture_check("conNew-local"));
  EXPECT_FALSE(is_conjecture_check("locnil"));
}
