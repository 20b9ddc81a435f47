// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 only
// when every selected criterion passes.
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsind/harness.hpp"

using namespace fsind;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string row_summary(const RunReport& r) {
  std::size_t pass = 0, fail = 0, skipped = 0, error = 0;
  std::string failed;
  for (const auto& row : r.rows) {
    if (row.status == "pass") ++pass;
    if (row.status == "skipped") ++skipped;
    if (row.status == "fail" || row.status == "error") {
      (row.status == "fail" ? fail : error)++;
      failed += " [" + row.row.key + "]";
    }
  }
  return std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " + std::to_string(error) + " error, " +
         std::to_string(skipped) + " skipped" + failed;
}

Outcome table_criterion(const std::string& id, const HarnessOptions& opts) {
  RunReport r = run_table(id, opts);
  return {r.exit_code() == 0, row_summary(r)};
}

struct ScanTally {
  std::size_t groups = 0, errors = 0;
  std::size_t theorem_pass = 0, theorem_fail = 0, conj_pass = 0, findings = 0;
  std::string first_theorem_fail, first_finding;
};

ScanTally tally(const RunReport& r) {
  ScanTally t;
  for (const auto& g : r.groups) {
    ++t.groups;
    if (g.status == "error") ++t.errors;
    for (const auto& c : g.checks) {
      const bool conj = is_conjecture_check(c.check);
      if (c.status == "pass") ++(conj ? t.conj_pass : t.theorem_pass);
      if (c.status != "fail") continue;
      std::string where = g.groupspec + " " + c.check;
      if (conj) {
        if (t.findings++ == 0) t.first_finding = where;
      } else if (t.theorem_fail++ == 0) {
        t.first_theorem_fail = where;
      }
    }
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::set<int> only;
  std::optional<std::string> cache;
  unsigned jobs = 1;
  app.add_option("--only", only, "Criteria to run (default all)")->check(CLI::Range(1, 8));
  app.add_option("--cache-dir", cache, "Character table cache");
  app.add_option("--jobs", jobs, "Worker threads");
  CLI11_PARSE(app, argc, argv);

  HarnessOptions opts;
  opts.jobs = jobs;
  if (cache) opts.cache_dir = *cache;

  // Criteria 6 and 7 share one corpus scan.
  std::optional<ScanTally> scan;
  auto corpus_scan = [&]() -> const ScanTally& {
    if (!scan) scan = tally(run_scan(default_corpus(), CheckSelection{}, opts));
    return *scan;
  };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dihedral d=3 table", [&] { return table_criterion("main-d3", opts); }},
      {"dihedral d=4 table", [&] { return table_criterion("main-d4", opts); }},
      {"quaternion table", [&] { return table_criterion("q8", opts); }},
      {"quaternion real height-0 counts", [&] { return table_criterion("q8-h0", opts); }},
      {"homocyclic table and matrix fit",
       [&] {
         Outcome o = table_criterion("homocyclic", opts);
         GroupScan g = scan_group("C4^2:C3", CheckSelection::parse("homocyclic"), opts);
         bool fit = false;
         for (const auto& c : g.checks)
           if (c.check == "homocyclic-Qhat" && c.status == "pass") fit = true;
         return Outcome{o.pass && fit, o.detail + "; C4^2:C3 fit " + (fit ? "pass" : "FAIL")};
       }},
      {"property suite on default corpus",
       [&] {
         const ScanTally& t = corpus_scan();
         std::string d = std::to_string(t.groups) + " groups, " + std::to_string(t.theorem_pass) + " checks pass, " +
                         std::to_string(t.theorem_fail) + " fail, " + std::to_string(t.errors) + " errors";
         if (t.theorem_fail) d += ", first: " + t.first_theorem_fail;
         return Outcome{t.theorem_fail == 0 && t.errors == 0 && t.groups > 0, d};
       }},
      {"conjecture scan",
       [&] {
         const ScanTally& t = corpus_scan();
         std::string d = std::to_string(t.conj_pass) + " checks pass, " + std::to_string(t.findings) + " findings";
         if (t.findings) d += ", first: " + t.first_finding;
         return Outcome{t.findings == 0 && t.errors == 0 && t.conj_pass > 0, d};
       }},
      {"deterministic report",
       [&] {
         const std::string a = run_table("main-d3", opts).to_json().dump();
         HarnessOptions other = opts;
         const std::string b = run_table("main-d3", other).to_json().dump();
         return Outcome{a == b, a == b ? "byte-identical JSON" : "JSON differs between runs"};
       }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(n)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d: %s %s: %s\n", n, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
