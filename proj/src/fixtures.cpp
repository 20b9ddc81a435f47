#include "fsind/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fsind/errors.hpp"
#include "fsind/isotype.hpp"

namespace fsind {

std::size_t involution_count(const Group& g) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_order(i) == 2) ++n;
  return n;
}

Fixture parse_fixture(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("fixture: ") + e.what());
  }
  try {
    const std::string name = doc.at("name").get<std::string>();
    const std::size_t degree = doc.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& g : doc.at("generators")) {
      auto images = g.get<std::vector<Point>>();
      if (images.size() != degree) throw InvalidArgument("fixture " + name + ": generator degree mismatch");
      gens.emplace_back(images);
    }
    if (gens.empty()) gens.emplace_back(degree);
    Group group = Group::generate(gens, name);

    const auto& ex = doc.at("expected");
    auto check = [&](const char* field, std::size_t computed) {
      std::size_t want = ex.at(field).get<std::size_t>();
      if (want != computed)
        throw Corruption("fixture " + name + ": " + field + " expected " + std::to_string(want) + ", computed " +
                         std::to_string(computed));
    };
    check("order", group.order());
    check("exponent", group.exponent());
    check("center_order", center(group).order());
    check("derived_order", derived_subgroup(group).order());
    check("involution_count", involution_count(group));
    // Invariant factors or elementary divisors are both accepted.
    std::vector<std::size_t> ab;
    for (std::size_t n : ex.at("abelianization").get<std::vector<std::size_t>>())
      for (std::size_t p = 2; n > 1; ++p) {
        std::size_t pk = 1;
        while (n % p == 0) {
          n /= p;
          pk *= p;
        }
        if (pk > 1) ab.push_back(pk);
      }
    std::sort(ab.begin(), ab.end());
    if (ab != abelian_invariants(group)) throw Corruption("fixture " + name + ": abelianization mismatch");
    return Fixture{name, group};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("fixture: ") + e.what());
  }
}

Fixture load_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot open fixture " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

std::map<std::string, Fixture> load_fixture_dir(const std::filesystem::path& dir) {
  std::map<std::string, Fixture> out;
  if (!std::filesystem::is_directory(dir)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    Fixture fx = load_fixture(f);
    std::string key = fx.name;
    out.emplace(std::move(key), std::move(fx));
  }
  return out;
}

}  // namespace fsind
