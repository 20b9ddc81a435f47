#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsind/blocks.hpp"
#include "fsind/chartab.hpp"
#include "fsind/constructions.hpp"
#include "fsind/cyclotomic.hpp"
#include "fsind/groupspec.hpp"
#include "fsind/registry.hpp"
#include "fsind/subsections.hpp"

namespace fsind {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Per-groupspec JSON character tables. Writes go to a temporary file that
/// is renamed into place, so concurrent writers never expose partial files.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const std::string& groupspec) const;
  /// Cached table if present and consistent with g, else nullopt.
  std::optional<CharacterTable> load(const std::string& groupspec, const Group& g) const;
  void store(const std::string& groupspec, const CharacterTable& t) const;

 private:
  std::filesystem::path dir_;
};

struct HarnessOptions {
  EvalOptions eval;
  std::optional<std::filesystem::path> cache_dir;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;  // adds wall-clock times to reports (breaks byte-identity)
};

/// Everything computed once per groupspec.
struct Analysis {
  std::string groupspec;
  Example example;
  std::shared_ptr<const CharacterTable> table;
  std::shared_ptr<const Mod2Reduction> red;
  std::vector<BlockData> blocks;
  std::size_t designated = 0;
};

/// Builds the group and its table (through the cache when configured).
Analysis analyze(const std::string& groupspec, const HarnessOptions& opts);

/// An indicator vector in two parts; parts compare as multisets.
using Signature = std::vector<std::vector<int>>;

/// Parses "1,1,0,0;1", "0^12", "(-1)^8"; a string without ';' is one part.
Signature parse_signature(const std::string& text);
/// Each part sorted descending, so that equal multisets compare equal.
Signature canonical(Signature s);
std::string format_signature(const Signature& s);

/// Indicators of the block read off as the row kind prescribes. Dihedral
/// rows throw TheoryViolation when the height-1 family is not unique or a
/// character outside it has indicator other than 1.
Signature block_signature(const CharacterTable& t, const BlockData& b, RowKind kind);

/// Number of real characters of height 0.
std::size_t real_height0_count(const CharacterTable& t, const BlockData& b);

struct RowResult {
  ExpectedRow row;
  std::string status;  // pass | fail | skipped | error
  nlohmann::json computed;
  std::vector<std::string> diagnostics;
  double seconds = 0;
};

RowResult evaluate_row(const ExpectedRow& row, const HarnessOptions& opts);

struct GroupScan {
  std::string groupspec;
  std::string status;  // pass | fail | finding | error
  std::vector<CheckResult> checks;
  std::vector<std::string> diagnostics;
  double seconds = 0;
};

/// Check families selectable in a scan.
struct CheckSelection {
  bool invariants = true;   // table, block and subsection invariants, corpus assertions
  bool lemphix = true;
  bool locnil = true;
  bool conjectures = true;
  bool homocyclic = true;
  /// "all" or a comma-separated subset of the names above.
  static CheckSelection parse(const std::string& text);
};

/// Whether a failing check is a conjecture finding rather than a theorem failure.
bool is_conjecture_check(const std::string& check);

GroupScan scan_group(const std::string& groupspec, const CheckSelection& sel, const HarnessOptions& opts);

struct RunReport {
  std::string command;  // "table" or "scan"
  std::string subject;  // table id or corpus description
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;
  std::vector<RowResult> rows;
  std::vector<GroupScan> groups;

  /// 0 all pass (skips allowed), 1 mismatch or finding, 2 computational failure.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

RunReport run_table(const std::string& table, const HarnessOptions& opts);
RunReport run_scan(const std::vector<std::string>& corpus, const CheckSelection& sel, const HarnessOptions& opts);

/// Newline-separated groupspecs; '#' starts a comment.
std::vector<std::string> read_corpus(const std::filesystem::path& file);
std::vector<std::string> parse_corpus(const std::string& text);

}  // namespace fsind
