// fsind: character tables, 2-blocks and indicator tables from the command line.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsind/blocks.hpp"
#include "fsind/errors.hpp"
#include "fsind/fixtures.hpp"
#include "fsind/harness.hpp"
#include "fsind/registry.hpp"

using namespace fsind;
using nlohmann::json;

namespace {

struct Common {
  std::string format = "text";
  std::string out;
  std::string cache_dir;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_order = Group::kDefaultMaxOrder;
  std::string fixtures;
  bool timings = false;
};

HarnessOptions make_options(const Common& c) {
  HarnessOptions o;
  o.eval.max_order = c.max_order;
  if (!c.fixtures.empty())
    for (auto& [name, fx] : load_fixture_dir(c.fixtures)) o.eval.fixtures.emplace(name, fx.group);
  std::string dir = c.cache_dir;
  if (const char* env = std::getenv("FSIND_CACHE_DIR"); env && *env) dir = env;
  if (!dir.empty()) o.cache_dir = dir;
  o.jobs = c.jobs;
  o.seed = c.seed;
  o.timings = c.timings;
  return o;
}

void write_out(const Common& c, const json& doc) {
  if (c.out.empty()) return;
  std::ofstream f(c.out);
  if (!f) throw InvalidArgument("cannot write " + c.out);
  f << doc.dump(2) << '\n';
}

int emit_report(const Common& c, const RunReport& rep) {
  const json doc = rep.to_json();
  write_out(c, doc);
  if (c.format == "json")
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << rep.to_text();
  return rep.exit_code();
}

std::string chartab_text(const CharacterTable& t) {
  const Group& g = t.group();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"", "eps"}, sizes{"size", ""}, orders{"order", ""};
  for (const auto& k : g.classes()) {
    head.push_back(std::to_string(k.index));
    sizes.push_back(std::to_string(k.size));
    orders.push_back(std::to_string(k.element_order));
  }
  cells.push_back(head);
  cells.push_back(orders);
  cells.push_back(sizes);
  for (std::size_t i = 0; i < t.num_chars(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1), std::to_string(t.fs_indicator(i))};
    for (const auto& v : t.character(i)) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
  std::ostringstream out;
  out << g.name() << "  order " << g.order() << ", " << g.num_classes() << " classes\n";
  for (const auto& r : cells) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << r[j];
    out << '\n';
  }
  return out.str();
}

std::string blockreport_text(const json& doc, std::size_t designated) {
  std::ostringstream out;
  out << doc["groupspec"].get<std::string>() << '\n';
  std::size_t i = 0;
  for (const auto& b : doc["blocks"]) {
    out << (i == designated ? "* " : "  ") << "block " << i << ": chars " << b["chars"].dump() << " defect "
        << b["defect"] << " l=" << b["l"] << " D=" << b["D_type"].get<std::string>();
    if (!b["E_type"].is_null()) out << " E=" << b["E_type"].get<std::string>();
    out << (b["principal"].get<bool>() ? " principal" : "") << (b["real"].get<bool>() ? " real" : "")
        << " eps " << b["eps_vector"].dump() << '\n';
    ++i;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-Schur indicators of 2-blocks: tables, scans and reports"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", c.out, "also write the JSON report to this file");
    sub->add_option("--cache-dir", c.cache_dir, "character table cache (FSIND_CACHE_DIR overrides)");
    sub->add_option("--jobs", c.jobs, "groups computed in parallel")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", c.seed, "seed for the processing order");
    sub->add_option("--max-order", c.max_order, "largest group order to enumerate");
    sub->add_option("--fixtures", c.fixtures, "directory of fixture groups");
    sub->add_flag("--timings", c.timings, "include wall-clock times (output no longer reproducible)");
  };

  std::string table_id;
  auto* table = app.add_subcommand("table", "reproduce an indicator table from the registry");
  table->add_option("id", table_id, "main-d3 | main-d4 | q8 | q8-h0 | homocyclic")->required();
  common(table);

  std::string corpus_file, checks = "all";
  std::vector<std::string> specs;
  bool use_default = false;
  auto* scan = app.add_subcommand("scan", "run invariants, lemma and conjecture checks over a corpus");
  scan->add_option("corpus", corpus_file, "newline-separated groupspecs, '#' comments");
  scan->add_option("--spec", specs, "groupspec to scan (repeatable)");
  scan->add_flag("--default-corpus", use_default, "scan the built-in corpus");
  scan->add_option("--checks", checks, "all, or a comma list of invariants,lemphix,locnil,conjectures,homocyclic");
  common(scan);

  std::string spec;
  auto* chartab = app.add_subcommand("chartab", "print the character table of a group");
  chartab->add_option("groupspec", spec)->required();
  common(chartab);
  auto* blockreport = app.add_subcommand("blockreport", "print the 2-blocks of a group");
  blockreport->add_option("groupspec", spec)->required();
  common(blockreport);

  auto* corpus = app.add_subcommand("corpus", "print the built-in scan corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) {
      for (const auto& s : default_corpus()) std::cout << s << '\n';
      return 0;
    }
    const HarnessOptions opts = make_options(c);
    if (table->parsed()) return emit_report(c, run_table(table_id, opts));
    if (scan->parsed()) {
      std::vector<std::string> list;
      if (!corpus_file.empty()) list = read_corpus(corpus_file);
      list.insert(list.end(), specs.begin(), specs.end());
      if (use_default || (corpus_file.empty() && specs.empty())) {
        auto d = default_corpus();
        list.insert(list.end(), d.begin(), d.end());
      }
      return emit_report(c, run_scan(list, CheckSelection::parse(checks), opts));
    }
    const Analysis a = analyze(spec, opts);
    if (chartab->parsed()) {
      const json doc = a.table->to_json(spec);
      write_out(c, doc);
      std::cout << (c.format == "json" ? doc.dump(2) + "\n" : chartab_text(*a.table));
      return 0;
    }
    std::vector<BlockSummary> sums;
    for (const auto& b : a.blocks) sums.push_back(summarize_block(*a.table, b, *a.red));
    json doc = block_report_json(spec, sums);
    doc["designated"] = a.designated;
    write_out(c, doc);
    std::cout << (c.format == "json" ? doc.dump(2) + "\n" : blockreport_text(doc, a.designated));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
