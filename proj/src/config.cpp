#include "orthospec/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "orthospec/errors.hpp"

namespace orthospec {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Entry {
  std::string value;
  int line = 0;
};

[[noreturn]] void fail(const std::string& key, int line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + key + ": " + what);
}

int as_int(const std::string& key, const Entry& e) {
  int v = 0;
  const char* b = e.value.data();
  const char* end = b + e.value.size();
  auto [p, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || p != end) fail(key, e.line, "expected an integer, got '" + e.value + "'");
  return v;
}

std::vector<double> as_reals(const std::string& key, const Entry& e) {
  std::string s = e.value;
  for (char& c : s)
    if (c == ',' || c == ';' || c == '[' || c == ']') c = ' ';
  std::istringstream in(s);
  std::string tok;
  std::vector<double> out;
  while (in >> tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) fail(key, e.line, "expected a number, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

const std::vector<std::string> kKeys = {
    "surface.family",      "surface.genus",      "surface.boundaries", "rep.construction",
    "rep.n",               "rep.lengths",        "rep.traces",         "run.max_word_length",
    "run.mcshane_depth",   "run.validate_length", "run.zeta",          "mcshane.pants",
    "output.path",         "output.format"};

}  // namespace

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> kv;
  std::string section;
  std::string last_key;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      last_key.clear();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (last_key.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
      kv[last_key].value += " " + line;
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!section.empty()) key = section + "." + key;
    const bool known = std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end() ||
                       (key.rfind("rep.matrix.", 0) == 0 && key.size() > 11);
    if (!known) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (kv.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = Entry{trim(line.substr(eq + 1)), lineno};
    last_key = key;
  }

  RunConfig cfg;
  cfg.hash = fnv1a(text);
  auto get = [&](const std::string& k) -> const Entry* {
    auto it = kv.find(k);
    return it == kv.end() ? nullptr : &it->second;
  };

  const Entry* fam = get("surface.family");
  if (!fam || fam->value.empty()) throw ConfigError("missing required field surface.family");
  cfg.rep.family = fam->value;
  if (cfg.rep.family != "pants" && cfg.rep.family != "one_holed_torus" && cfg.rep.family != "custom")
    fail("surface.family", fam->line, "expected pants, one_holed_torus or custom");
  if (auto e = get("surface.genus")) cfg.rep.genus = as_int("surface.genus", *e);
  if (auto e = get("surface.boundaries")) cfg.rep.boundaries = as_int("surface.boundaries", *e);
  if (cfg.rep.family == "custom" && (cfg.rep.genus < 0 || cfg.rep.boundaries < 1))
    throw ConfigError("custom surface needs surface.genus >= 0 and surface.boundaries >= 1");

  cfg.rep.construction = "fuchsian";
  if (auto e = get("rep.construction")) {
    cfg.rep.construction = e->value;
    if (e->value != "fuchsian" && e->value != "irreducible_embed" && e->value != "explicit")
      fail("rep.construction", e->line, "expected fuchsian, irreducible_embed or explicit");
  }
  if (auto e = get("rep.n")) {
    cfg.rep.n = as_int("rep.n", *e);
    if (cfg.rep.n < 2 || cfg.rep.n > 16) fail("rep.n", e->line, "expected 2 <= n <= 16");
  }
  if (auto e = get("rep.lengths")) cfg.rep.lengths = as_reals("rep.lengths", *e);
  if (auto e = get("rep.traces")) cfg.rep.traces = as_reals("rep.traces", *e);
  for (const auto& [k, e] : kv)
    if (k.rfind("rep.matrix.", 0) == 0) cfg.rep.matrices[k.substr(11)] = as_reals(k, e);
  if (cfg.rep.construction != "explicit") {
    if (!cfg.rep.matrices.empty())
      throw ConfigError("rep.matrix.* given but rep.construction is " + cfg.rep.construction);
    if (cfg.rep.family == "pants" && cfg.rep.lengths.size() != 3)
      throw ConfigError("rep.lengths must list three boundary lengths for pants");
    if (cfg.rep.family == "one_holed_torus" && cfg.rep.traces.size() != 2)
      throw ConfigError("rep.traces must list two traces for one_holed_torus");
  }

  if (auto e = get("run.max_word_length")) {
    cfg.max_word_length = as_int("run.max_word_length", *e);
    if (cfg.max_word_length < 0) fail("run.max_word_length", e->line, "must be >= 0");
  }
  if (auto e = get("run.mcshane_depth")) {
    cfg.mcshane_depth = as_int("run.mcshane_depth", *e);
    if (cfg.mcshane_depth < 0) fail("run.mcshane_depth", e->line, "must be >= 0");
  }
  if (auto e = get("run.validate_length")) {
    cfg.validate_length = as_int("run.validate_length", *e);
    if (cfg.validate_length < 1) fail("run.validate_length", e->line, "must be >= 1");
  }
  if (auto e = get("run.zeta")) cfg.rep.zeta = e->value;
  if (auto e = get("mcshane.pants")) {
    std::istringstream items(e->value);
    std::string item;
    while (std::getline(items, item, ';')) {
      if (trim(item).empty()) continue;
      const auto bar = item.find('|');
      if (bar == std::string::npos) fail("mcshane.pants", e->line, "expected 'beta | gamma' entries");
      cfg.custom_pants.emplace_back(trim(item.substr(0, bar)), trim(item.substr(bar + 1)));
    }
  }
  if (auto e = get("output.path")) cfg.output_path = e->value;
  if (auto e = get("output.format")) {
    cfg.output_format = e->value;
    if (e->value != "csv" && e->value != "text") fail("output.format", e->line, "expected csv or text");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace orthospec
