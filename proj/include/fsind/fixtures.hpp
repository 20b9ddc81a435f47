#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsind/group.hpp"

namespace fsind {

/// Externally supplied group, checked against its recorded invariants.
///
/// File format:
///   {"name": "...", "degree": n, "generators": [[images], ...],
///    "expected": {"order", "exponent", "center_order", "derived_order",
///                 "abelianization": [...], "involution_count"}}
struct Fixture {
  std::string name;
  Group group;
};

/// Throws InvalidArgument on malformed input and Corruption when a
/// recomputed invariant disagrees with the recorded one.
Fixture load_fixture(const std::filesystem::path& file);
Fixture parse_fixture(const std::string& json_text);

/// Every *.json file in a directory, keyed by fixture name.
std::map<std::string, Fixture> load_fixture_dir(const std::filesystem::path& dir);

std::size_t involution_count(const Group& g);

}  // namespace fsind
