#include "fsind/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "fsind/errors.hpp"
#include "fsind/factory.hpp"
#include "fsind/isotype.hpp"

namespace fsind {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; the seed only permutes
// the order in which items are picked up.
void parallel_for(std::size_t n, unsigned jobs, std::uint64_t seed, const std::function<void(std::size_t)>& fn) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i : order) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) fn(order[k]);
    });
  for (auto& th : pool) th.join();
}

CheckResult make_check(std::string name, std::size_t block, bool ok, json lhs, json rhs, json witness = nullptr) {
  return CheckResult{std::move(name), block, ok ? "pass" : "fail", std::move(lhs), std::move(rhs), std::move(witness)};
}

CheckResult skip_check(std::string name, std::size_t block, const std::string& why) {
  return CheckResult{std::move(name), block, "skipped", nullptr, nullptr, {{"reason", why}}};
}

bool is_tame_label(const std::string& label) {
  static const std::regex re("(D|Q|SD)[0-9]+");
  return std::regex_match(label, re);
}

bool is_dihedral_label(const std::string& label) {
  static const std::regex re("D[0-9]+");
  return std::regex_match(label, re);
}

Group centralizer_of_subgroup(const Group& e, const Group& d) {
  std::vector<Perm> els;
  for (const Perm& x : e.elements())
    if (std::all_of(d.generators().begin(), d.generators().end(), [&](const Perm& g) { return x * g == g * x; }))
      els.push_back(x);
  return Group::from_elements(e.degree(), els);
}

}  // namespace

// ---------------------------------------------------------------- cache

TableCache::TableCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path TableCache::file_for(const std::string& groupspec) const {
  std::string base;
  for (char c : groupspec) {
    if (base.size() >= 40) break;
    base += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  std::ostringstream name;
  name << base << '-' << std::hex << fnv1a(groupspec) << ".json";
  return dir_ / name.str();
}

std::optional<CharacterTable> TableCache::load(const std::string& groupspec, const Group& g) const {
  std::ifstream in(file_for(groupspec));
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (doc.at("engine_version") != kEngineVersion || doc.at("groupspec") != groupspec) return std::nullopt;
    return CharacterTable::from_json(g, doc.at("table"));
  } catch (const std::exception&) {
    // A stale or damaged entry is recomputed and overwritten.
    return std::nullopt;
  }
}

void TableCache::store(const std::string& groupspec, const CharacterTable& t) const {
  const fs::path target = file_for(groupspec);
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
         << std::chrono::steady_clock::now().time_since_epoch().count();
  const fs::path tmp = target.string() + suffix.str();
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    json doc = {{"engine_version", kEngineVersion}, {"groupspec", groupspec}, {"table", t.to_json(groupspec)}};
    out << doc.dump() << '\n';
  }
  fs::rename(tmp, target);
}

// ---------------------------------------------------------------- analysis

Analysis analyze(const std::string& groupspec, const HarnessOptions& opts) {
  Analysis a{groupspec, build_groupspec(groupspec, opts.eval), nullptr, nullptr, {}, 0};
  const Group& g = a.example.group;
  std::optional<CharacterTable> t;
  std::optional<TableCache> cache;
  if (opts.cache_dir) {
    cache.emplace(*opts.cache_dir);
    t = cache->load(groupspec, g);
  }
  if (!t) {
    t = CharacterTable::compute(g);
    if (cache) cache->store(groupspec, *t);
  }
  a.table = std::make_shared<const CharacterTable>(std::move(*t));
  a.red = std::make_shared<const Mod2Reduction>(static_cast<int>(a.table->exponent()));
  a.blocks = block_partition(*a.table, *a.red);
  a.designated = designated_block(a.example, *a.table, a.blocks);
  return a;
}

// ---------------------------------------------------------------- signatures

Signature parse_signature(const std::string& text) {
  static const std::regex term(R"(\s*(\(?\s*(-?[0-9]+)\s*\)?)\s*(\^\s*([0-9]+))?\s*)");
  Signature out;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    std::vector<int> v;
    std::stringstream items(part);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::smatch m;
      if (!std::regex_match(item, m, term)) throw InvalidArgument("bad indicator entry '" + item + "'");
      const int value = std::stoi(m[2].str());
      const int count = m[4].matched ? std::stoi(m[4].str()) : 1;
      if (value < -1 || value > 1) throw InvalidArgument("indicator out of range in '" + item + "'");
      v.insert(v.end(), static_cast<std::size_t>(count), value);
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw InvalidArgument("empty indicator string");
  return out;
}

Signature canonical(Signature s) {
  for (auto& part : s) std::sort(part.begin(), part.end(), std::greater<>());
  return s;
}

std::string format_signature(const Signature& s) {
  std::string out;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p) out += ';';
    const auto& part = s[p];
    for (std::size_t i = 0; i < part.size();) {
      std::size_t j = i;
      while (j < part.size() && part[j] == part[i]) ++j;
      const std::string v = std::to_string(part[i]);
      for (std::size_t k = i; k < j; ++k) {
        if (k) out += ',';
        if (j - i > 4) {
          // long runs are written as (v)^n, as in the printed tables
          out += (part[i] < 0 ? "(" + v + ")" : v) + "^" + std::to_string(j - i);
          break;
        }
        out += v;
      }
      i = j;
    }
  }
  return out;
}

std::size_t real_height0_count(const CharacterTable& t, const BlockData& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < b.chars.size(); ++i)
    if (b.heights[i] == 0 && t.is_real(b.chars[i])) ++n;
  return n;
}

Signature block_signature(const CharacterTable& t, const BlockData& b, RowKind kind) {
  Signature s(2);
  switch (kind) {
    case RowKind::Full:
      for (std::size_t i = 0; i < b.chars.size(); ++i) s[b.heights[i] == 0 ? 0 : 1].push_back(t.fs_indicator(b.chars[i]));
      break;
    case RowKind::TwoRational:
      for (std::size_t chi : b.chars) s[t.is_2rational(chi) ? 0 : 1].push_back(t.fs_indicator(chi));
      break;
    case RowKind::RealHeight0:
      s = {{static_cast<int>(real_height0_count(t, b))}};
      break;
    case RowKind::Dihedral: {
      std::vector<std::size_t> h1;
      for (std::size_t i = 0; i < b.chars.size(); ++i) {
        if (b.heights[i] == 0) s[0].push_back(t.fs_indicator(b.chars[i]));
        if (b.heights[i] == 1) h1.push_back(b.chars[i]);
      }
      if (b.defect < 3) throw TheoryViolation("dihedral row needs defect at least 3");
      const std::size_t size = std::size_t{1} << (b.defect - 3);
      std::vector<const std::vector<std::size_t>*> found;
      for (const auto& fam : t.two_conjugate_families()) {
        if (fam.size() != size) continue;
        if (std::all_of(fam.begin(), fam.end(), [&](std::size_t c) {
              return std::find(h1.begin(), h1.end(), c) != h1.end();
            }))
          found.push_back(&fam);
      }
      if (found.size() != 1)
        throw TheoryViolation("expected a unique height-1 family of size " + std::to_string(size) + ", found " +
                              std::to_string(found.size()));
      const auto& fam = *found.front();
      const int mu = t.fs_indicator(fam.front());
      for (std::size_t c : fam)
        if (t.fs_indicator(c) != mu) throw TheoryViolation("indicators differ inside the height-1 family");
      for (std::size_t c : h1)
        if (std::find(fam.begin(), fam.end(), c) == fam.end() && t.fs_indicator(c) != 1)
          throw TheoryViolation("height-1 character " + std::to_string(c) + " outside the family has indicator " +
                                std::to_string(t.fs_indicator(c)));
      s[1] = {mu};
      break;
    }
  }
  return s;
}

// ---------------------------------------------------------------- table rows

RowResult evaluate_row(const ExpectedRow& row, const HarnessOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RowResult r;
  r.row = row;
  if (!row.fixture.empty() && !opts.eval.fixtures.count(row.fixture)) {
    r.status = "skipped";
    r.diagnostics.push_back("fixture '" + row.fixture + "' not supplied");
    return r;
  }
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    r.diagnostics.push_back(msg);
  };
  try {
    const Analysis a = analyze(row.groupspec, opts);
    const CharacterTable& t = *a.table;
    const BlockData& B = a.blocks[a.designated];
    const BlockSummary sum = summarize_block(t, B, *a.red);
    r.computed = {{"order", t.group().order()}, {"block", B.index}, {"k", B.k()},        {"l", B.l},
                  {"defect", B.defect},         {"D_type", sum.d_type}, {"E_type", sum.e_type}};
    if (!row.d_type.empty() && sum.d_type != row.d_type) fail("defect group " + sum.d_type + ", expected " + row.d_type);
    if (!row.e_type.empty() && sum.e_type != row.e_type)
      fail("extended defect group " + sum.e_type + ", expected " + row.e_type);
    if (row.l != 0 && B.l != row.l) fail("l(B) = " + std::to_string(B.l) + ", expected " + std::to_string(row.l));
    if (a.example.predicted_pair && sum.pair) {
      const auto& [pd, pe] = *a.example.predicted_pair;
      if (pe.order() <= 256 && !(are_isomorphic(pd, sum.pair->D) && are_isomorphic(pe, sum.pair->E)))
        fail("defect pair differs from the predicted (Sylow2(H), Sylow2(Hhat))");
    }

    if (row.kind == RowKind::RealHeight0) {
      const std::size_t n = real_height0_count(t, B);
      r.computed["signature"] = n == 2 ? "exactly two" : "not two";
      r.computed["real_height0"] = n;
      if ((n == 2) != (row.expected == "exactly two"))
        fail(std::to_string(n) + " real height-0 characters, expected " + row.expected);
    } else {
      Signature got = block_signature(t, B, row.kind);
      Signature want = canonical(parse_signature(row.expected));
      if (want.size() == 1) {
        std::vector<int> flat;
        for (const auto& part : got) flat.insert(flat.end(), part.begin(), part.end());
        got = {flat};
      }
      got = canonical(got);
      r.computed["signature"] = format_signature(got);
      if (got != want) fail("indicators " + format_signature(got) + ", expected " + row.expected);
    }

    if (row.kind == RowKind::TwoRational) {
      const bool kl = (B.k() == 16 && B.l == 1) || (B.k() == 8 && B.l == 3);
      if (!kl) fail("(k, l) = (" + std::to_string(B.k()) + ", " + std::to_string(B.l) + ")");
      std::size_t rational = 0;
      for (std::size_t chi : B.chars) rational += t.is_2rational(chi) ? 1 : 0;
      r.computed["two_rational"] = rational;
      if (rational != 4) fail(std::to_string(rational) + " 2-rational characters, expected 4");
      if (B.l == 3) {
        auto subs = enumerate_subsections(t, B, *a.red);
        auto cols = all_columns(t, B, subs);
        CheckResult q = homocyclic_gendecomp_check(t, B, subs, cols);
        r.computed["Qhat_fit"] = q.status;
        if (q.status != "pass") fail("generalized decomposition matrix fit: " + q.status);
      }
    }
    r.status = ok ? "pass" : "fail";
  } catch (const TheoryViolation& e) {
    r.status = "fail";
    r.diagnostics.push_back(e.what());
  } catch (const std::exception& e) {
    r.status = "error";
    r.diagnostics.push_back(e.what());
  }
  r.seconds = seconds_since(t0);
  return r;
}

// ---------------------------------------------------------------- scans

CheckSelection CheckSelection::parse(const std::string& text) {
  CheckSelection s;
  if (text.empty() || text == "all") return s;
  s = CheckSelection{false, false, false, false, false};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "invariants") s.invariants = true;
    else if (item == "lemphix") s.lemphix = true;
    else if (item == "locnil") s.locnil = true;
    else if (item == "conjectures") s.conjectures = true;
    else if (item == "homocyclic") s.homocyclic = true;
    else if (item == "all") s = CheckSelection{};
    else throw InvalidArgument("unknown check family '" + item + "'");
  }
  return s;
}

bool is_conjecture_check(const std::string& check) {
  return check == "conC" || check == "conNew" || check == "conNew-local";
}

namespace {

std::vector<CheckResult> table_invariants(const CharacterTable& t) {
  const Group& g = t.group();
  std::vector<CheckResult> out;
  const std::size_t k = t.num_chars();

  bool rows = true;
  json witness = nullptr;
  for (std::size_t i = 0; i < k && rows; ++i)
    for (std::size_t j = i; j < k && rows; ++j) {
      CyclotomicNumber v = inner_product(g, t.character(i), t.character(j));
      if (!(v == CyclotomicNumber(i == j ? 1 : 0))) {
        rows = false;
        witness = {{"chars", {i, j}}, {"value", v.to_string()}};
      }
    }
  bool cols = true;
  for (std::size_t a = 0; a < k && cols; ++a)
    for (std::size_t b = a; b < k && cols; ++b) {
      CyclotomicNumber s;
      for (std::size_t i = 0; i < k; ++i) s += t.character(i)[a] * t.character(i)[b].conjugate();
      const long long want = a == b ? static_cast<long long>(g.classes()[a].centralizer_order) : 0;
      if (!(s == CyclotomicNumber(want))) {
        cols = false;
        witness = {{"classes", {a, b}}, {"value", s.to_string()}};
      }
    }
  out.push_back(make_check("table-orthogonality", 0, rows && cols, rows && cols, true, witness));

  mpz_class deg2 = 0;
  for (std::size_t i = 0; i < k; ++i) deg2 += mpz_class(static_cast<long>(t.degree(i))) * static_cast<long>(t.degree(i));
  out.push_back(make_check("degree-squares", 0, deg2 == mpz_class(static_cast<unsigned long>(g.order())),
                           deg2.get_str(), g.order()));

  if (g.order() <= 10000) {
    ClassFunction theta = t.sqrt_count();
    std::vector<std::size_t> direct = enumerate_sqrt_counts(g);
    bool same = true;
    for (std::size_t c = 0; c < theta.size(); ++c)
      if (!(theta[c] == CyclotomicNumber(static_cast<long long>(direct[c])))) same = false;
    out.push_back(make_check("sqrt-count", 0, same, same, true));
  } else {
    out.push_back(skip_check("sqrt-count", 0, "group order above 10^4"));
  }
  return out;
}

void block_checks(const CharacterTable& t, const BlockData& B, const Mod2Reduction& red, const CheckSelection& sel,
                  std::vector<CheckResult>& out) {
  const Group& g = t.group();
  std::optional<BlockSummary> sum;
  if (B.real) sum = summarize_block(t, B, red);

  if (sel.invariants && sum) {
    const DefectPair& p = *sum->pair;
    const bool e_is_d = p.E.order() == p.D.order();
    out.push_back(make_check("E=D-iff-principal", B.index, e_is_d == B.principal, e_is_d, B.principal));

    if (is_dihedral_label(sum->d_type) && p.D.order() >= 8 && B.l > 1) {
      Group ced = centralizer_of_subgroup(p.E, p.D);
      bool ok = ced.same_elements(center(p.D));
      if (!ok) ok = p.E.order() == 2 * p.D.order() && are_isomorphic(p.E, direct_product(p.D, cyclic(2)));
      out.push_back(make_check("nonexist", B.index, ok, sum->e_type, sum->d_type + "xC2 or C_E(D)=Z(D)"));
    }

    if (is_tame_label(sum->d_type) && B.defect >= 3) {
      std::size_t n = 0;
      bool all_one = true;
      for (std::size_t i = 0; i < B.chars.size(); ++i)
        if (B.heights[i] == 0 && t.is_real(B.chars[i])) {
          ++n;
          if (t.fs_indicator(B.chars[i]) != 1) all_one = false;
        }
      out.push_back(make_check("tameh0", B.index, (n == 2 || n == 4) && all_one,
                               {{"real_height0", n}, {"all_eps_1", all_one}}, "2 or 4, all eps = 1"));
    }

    // D/D' has a complement in E/D' iff some e in E \ D squares into D';
    // then every height-0 character of B has indicator >= 0.
    if (p.E.order() == 2 * p.D.order()) {
      const Group dd = derived_subgroup(p.D);
      bool splits = false;
      for (const Perm& e : set_difference(p.E, p.D))
        if (dd.contains(e * e)) splits = true;
      if (splits) {
        int min_eps = 1;
        for (std::size_t i = 0; i < B.chars.size(); ++i)
          if (B.heights[i] == 0) min_eps = std::min(min_eps, t.fs_indicator(B.chars[i]));
        out.push_back(make_check("gow", B.index, min_eps >= 0, min_eps, ">=0"));
      } else {
        out.push_back(skip_check("gow", B.index, "D/D' has no complement in E/D'"));
      }
    }
  }

  // Defect-zero blocks have only the trivial subsection and l = k = 1.
  if (B.defect == 0) return;
  if (!(sel.invariants || sel.lemphix || sel.locnil || sel.conjectures || sel.homocyclic)) return;

  std::vector<Subsection> subs;
  try {
    subs = enumerate_subsections(t, B, red);
  } catch (const TheoryViolation& e) {
    out.push_back(make_check("subsection-count", B.index, false, nullptr, B.k(), {{"error", e.what()}}));
    return;
  }
  if (sel.invariants) {
    int sum_l = 0;
    for (const auto& s : subs) sum_l += s.l();
    out.push_back(make_check("subsection-count", B.index, sum_l == static_cast<int>(B.k()), sum_l, B.k()));
  }
  std::vector<GenDecompColumn> cols = all_columns(t, B, subs);
  if (sel.invariants) out.push_back(column_orthogonality_check(B, subs, cols));
  if (sum) {
    const DefectPair& p = *sum->pair;
    if (sel.lemphix)
      for (auto& r : lemphix_checks(t, B, p, subs, cols)) out.push_back(std::move(r));
    if (sel.locnil)
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const GenDecompColumn* c = nullptr;
        for (const auto& cc : cols)
          if (cc.subsection == i) c = &cc;
        out.push_back(locnil_check(t, B, p, subs[i], c));
      }
    if (sel.conjectures)
      for (auto& r : conjecture_checks(t, B, p, subs, cols)) out.push_back(std::move(r));
    if (sel.homocyclic && B.l == 3 && sum->d_type == "C4xC4")
      out.push_back(homocyclic_gendecomp_check(t, B, subs, cols));
  }
  (void)g;
}

}  // namespace

GroupScan scan_group(const std::string& groupspec, const CheckSelection& sel, const HarnessOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  GroupScan gs;
  gs.groupspec = groupspec;
  try {
    const Analysis a = analyze(groupspec, opts);
    const CharacterTable& t = *a.table;
    if (sel.invariants) {
      for (auto& r : table_invariants(t)) gs.checks.push_back(std::move(r));
      std::size_t sum_k = 0;
      int sum_l = 0;
      for (const auto& B : a.blocks) {
        sum_k += B.k();
        sum_l += B.l;
      }
      const std::size_t odd = t.odd_classes().size();
      gs.checks.push_back(make_check("block-partition", 0,
                                     sum_k == t.num_chars() && sum_l == static_cast<int>(odd),
                                     {{"sum_k", sum_k}, {"sum_l", sum_l}},
                                     {{"k(G)", t.num_chars()}, {"odd_classes", odd}}));
    }
    for (const auto& B : a.blocks) block_checks(t, B, *a.red, sel, gs.checks);
    bool fail = false, finding = false;
    for (const auto& c : gs.checks)
      if (c.status == "fail") (is_conjecture_check(c.check) ? finding : fail) = true;
    gs.status = fail ? "fail" : finding ? "finding" : "pass";
  } catch (const TheoryViolation& e) {
    gs.status = "fail";
    gs.diagnostics.push_back(e.what());
  } catch (const std::exception& e) {
    gs.status = "error";
    gs.diagnostics.push_back(e.what());
  }
  gs.seconds = seconds_since(t0);
  return gs;
}

// ---------------------------------------------------------------- reports

int RunReport::exit_code() const {
  bool error = false, bad = false;
  for (const auto& r : rows) {
    if (r.status == "error") error = true;
    if (r.status == "fail") bad = true;
  }
  for (const auto& g : groups) {
    if (g.status == "error") error = true;
    if (g.status == "fail" || g.status == "finding") bad = true;
  }
  return error ? 2 : bad ? 1 : 0;
}

json RunReport::to_json() const {
  json doc = {{"command", command}, {"subject", subject}, {"engine_version", kEngineVersion}, {"seed", seed}};
  std::map<std::string, std::size_t> counts;
  if (command == "table") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j = {{"key", r.row.key},
                {"groupspec", r.row.groupspec},
                {"source", r.row.source},
                {"status", r.status},
                {"expected", r.row.expected},
                {"computed", r.computed},
                {"diagnostics", r.diagnostics}};
      if (timings) j["seconds"] = r.seconds;
      arr.push_back(std::move(j));
      ++counts[r.status];
    }
    doc["rows"] = std::move(arr);
  } else {
    json arr = json::array();
    for (const auto& g : groups) {
      json checks = json::array();
      std::map<std::string, std::size_t> per;
      for (const auto& c : g.checks) {
        ++per[c.status];
        if (c.status != "pass") checks.push_back(check_to_json(g.groupspec, c));
      }
      json j = {{"groupspec", g.groupspec},
                {"status", g.status},
                {"check_counts", per},
                {"non_passing", checks},
                {"diagnostics", g.diagnostics}};
      if (timings) j["seconds"] = g.seconds;
      arr.push_back(std::move(j));
      ++counts[g.status];
    }
    doc["groups"] = std::move(arr);
  }
  doc["summary"] = counts;
  doc["exit_code"] = exit_code();
  return doc;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  auto upper = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
  };
  std::map<std::string, std::size_t> counts;
  if (command == "table") {
    for (const auto& r : rows) {
      ++counts[r.status];
      out << upper(r.status) << "  " << r.row.key << "  [" << r.row.groupspec << "]  expected " << r.row.expected;
      if (r.computed.contains("signature")) out << "  computed " << r.computed["signature"].get<std::string>();
      if (timings) out << "  (" << r.seconds << " s)";
      out << '\n';
      for (const auto& d : r.diagnostics) out << "    " << d << '\n';
    }
  } else {
    for (const auto& g : groups) {
      ++counts[g.status];
      std::size_t pass = 0, skip = 0;
      for (const auto& c : g.checks) {
        if (c.status == "pass") ++pass;
        if (c.status == "skipped") ++skip;
      }
      out << upper(g.status) << "  " << g.groupspec << "  " << g.checks.size() << " checks, " << pass << " pass, "
          << skip << " skipped";
      if (timings) out << "  (" << g.seconds << " s)";
      out << '\n';
      for (const auto& c : g.checks)
        if (c.status == "fail")
          out << "    " << (is_conjecture_check(c.check) ? "finding " : "failure ") << check_to_json(g.groupspec, c).dump()
              << '\n';
      for (const auto& d : g.diagnostics) out << "    " << d << '\n';
    }
  }
  out << command << ' ' << subject << ':';
  for (const auto& [k, v] : counts) out << ' ' << k << '=' << v;
  out << "  exit " << exit_code() << '\n';
  return out.str();
}

RunReport run_table(const std::string& table, const HarnessOptions& opts) {
  RunReport rep;
  rep.command = "table";
  rep.subject = table;
  rep.seed = opts.seed;
  rep.timings = opts.timings;
  const std::vector<ExpectedRow> rows = registry_rows(table);
  rep.rows.resize(rows.size());
  parallel_for(rows.size(), opts.jobs, opts.seed, [&](std::size_t i) { rep.rows[i] = evaluate_row(rows[i], opts); });
  return rep;
}

RunReport run_scan(const std::vector<std::string>& corpus, const CheckSelection& sel, const HarnessOptions& opts) {
  RunReport rep;
  rep.command = "scan";
  rep.subject = std::to_string(corpus.size()) + " groups";
  rep.seed = opts.seed;
  rep.timings = opts.timings;
  rep.groups.resize(corpus.size());
  parallel_for(corpus.size(), opts.jobs, opts.seed,
               [&](std::size_t i) { rep.groups[i] = scan_group(corpus[i], sel, opts); });
  return rep;
}

std::vector<std::string> parse_corpus(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> read_corpus(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read corpus file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

}  // namespace fsind
