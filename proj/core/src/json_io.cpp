#include "bis/json_io.hpp"

#include <fstream>

#include "bis/builtins.hpp"
#include "bis/errors.hpp"

namespace bis {

json to_json(const PartialInjection& p) {
  json j;
  j["n"] = p.n;
  json pairs = json::array();
  for (auto& [s, t] : p.map) pairs.push_back(json::array({s, t}));
  j["map"] = pairs;
  return j;
}

PartialInjection partial_injection_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("map"))
    throw InputError("partial injection JSON needs \"n\" and \"map\"");
  std::vector<std::pair<int, int>> pairs;
  for (auto& e : j.at("map")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return PartialInjection(j.at("n").get<int>(), std::move(pairs));
}

json to_json(const InverseSemigroup& s) {
  json j;
  j["elements"] = s.names;
  json mul = json::array();
  for (int x = 0; x < s.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < s.size(); ++y) row.push_back(s.mul(x, y));
    mul.push_back(row);
  }
  j["mul"] = mul;
  json inv = json::array();
  for (int x = 0; x < s.size(); ++x) inv.push_back(s.inv(x));
  j["inv"] = inv;
  if (s.zero >= 0) j["zero"] = s.zero;
  if (s.one >= 0) j["one"] = s.one;
  return j;
}

InverseSemigroup semigroup_from_json(const json& j) {
  InverseSemigroup s;
  if (!j.contains("elements") || !j.contains("mul") || !j.contains("inv"))
    throw InputError("semigroup JSON needs \"elements\", \"mul\", \"inv\"");
  s.names = j.at("elements").get<std::vector<std::string>>();
  int n = static_cast<int>(s.names.size());
  if (n == 0 || n > 65535) throw InputError("semigroup JSON: bad element count");
  auto& mul = j.at("mul");
  if (static_cast<int>(mul.size()) != n) throw InputError("semigroup JSON: mul row count");
  s.mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(mul[x].size()) != n) throw InputError("semigroup JSON: mul row size");
    for (int y = 0; y < n; ++y) {
      int v = mul[x][y].get<int>();
      if (v < 0 || v >= n) throw InputError("semigroup JSON: mul entry out of range");
      s.mul_table[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(v);
    }
  }
  auto& inv = j.at("inv");
  if (static_cast<int>(inv.size()) != n) throw InputError("semigroup JSON: inv size");
  s.inv_table.resize(n);
  for (int x = 0; x < n; ++x) {
    int v = inv[x].get<int>();
    if (v < 0 || v >= n) throw InputError("semigroup JSON: inv entry out of range");
    s.inv_table[x] = static_cast<std::uint16_t>(v);
  }
  s.zero = j.value("zero", -1);
  s.one = j.value("one", -1);
  Diagnostic diag = verify_inverse_semigroup(s);
  if (!diag.ok) throw InputError("semigroup JSON rejected: " + diag.message);
  s.detect_constants();
  return s;
}

json to_json(const Group& g) {
  json j;
  j["elements"] = g.names;
  json mul = json::array();
  for (int x = 0; x < g.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < g.size(); ++y) row.push_back(g.mul(x, y));
    mul.push_back(row);
  }
  j["mul"] = mul;
  return j;
}

Group group_from_json(const json& j) {
  if (j.contains("permutation_generators")) {
    int degree = j.value("degree", 0);
    std::vector<std::vector<std::vector<int>>> gens;
    for (auto& g : j.at("permutation_generators")) {
      std::vector<std::vector<int>> cycles;
      for (auto& c : g) {
        std::vector<int> cyc = c.get<std::vector<int>>();
        for (int p : cyc) degree = std::max(degree, p);
        cycles.push_back(std::move(cyc));
      }
      gens.push_back(std::move(cycles));
    }
    if (degree < 1) throw InputError("group JSON: empty permutation generators need a degree");
    return group_from_permutations(degree, gens);
  }
  if (!j.contains("elements") || !j.contains("mul"))
    throw InputError("group JSON needs \"elements\" and \"mul\" (or permutation generators)");
  Group g;
  g.names = j.at("elements").get<std::vector<std::string>>();
  int n = static_cast<int>(g.names.size());
  if (n == 0 || n > 65535) throw InputError("group JSON: bad element count");
  auto& mul = j.at("mul");
  if (static_cast<int>(mul.size()) != n) throw InputError("group JSON: mul row count");
  g.mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(mul[x].size()) != n) throw InputError("group JSON: mul row size");
    for (int y = 0; y < n; ++y) {
      int v = mul[x][y].get<int>();
      if (v < 0 || v >= n) throw InputError("group JSON: mul entry out of range");
      g.mul_table[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(v);
    }
  }
  // identity and inverses are derived from the table
  g.id = -1;
  for (int e = 0; e < n && g.id < 0; ++e) {
    bool unit = true;
    for (int x = 0; x < n && unit; ++x)
      if (g.mul(e, x) != x || g.mul(x, e) != x) unit = false;
    if (unit) g.id = e;
  }
  if (g.id < 0) throw InputError("group JSON: no identity element");
  g.inv_table.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == g.id && g.mul(y, x) == g.id) {
        found = y;
        break;
      }
    if (found < 0) throw InputError("group JSON: element without inverse");
    g.inv_table[x] = static_cast<std::uint16_t>(found);
  }
  validate_group(g);
  return g;
}

json to_json(const VarietySpec& v) {
  json j;
  json gens = json::array();
  for (auto& g : v.generators) {
    json e;
    e["n"] = g.n;
    e["group"] = g.label.empty() ? to_json(g.group) : json(g.label);
    gens.push_back(e);
  }
  j["generators"] = gens;
  return j;
}

VarietySpec variety_from_json(const json& j) {
  VarietySpec v;
  if (!j.contains("generators")) throw InputError("variety JSON needs \"generators\"");
  for (auto& e : j.at("generators")) {
    VarietySpec::Generator g;
    g.n = e.at("n").get<int>();
    if (g.n < 1) throw InputError("variety JSON: generator order must be positive");
    auto& grp = e.at("group");
    if (grp.is_string()) {
      auto b = builtin_group(grp.get<std::string>());
      if (!b) throw InputError("variety JSON: unknown builtin group " + grp.get<std::string>());
      g.group = *b;
      g.label = grp.get<std::string>();
    } else {
      g.group = group_from_json(grp);
    }
    v.generators.push_back(std::move(g));
  }
  return v;
}

json rook_to_json(const RookMatrix& m, const std::string& base_id) {
  json j;
  j["n"] = m.n;
  j["base"] = base_id;
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int c = 0; c < m.n; ++c) row.push_back(m.at(i, c));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

RookMatrix rook_from_json(const json& j, const Bias& base, std::string* base_id) {
  if (!j.contains("n") || !j.contains("entries"))
    throw InputError("rook matrix JSON needs \"n\" and \"entries\"");
  RookMatrix m;
  m.n = j.at("n").get<int>();
  if (m.n < 1) throw InputError("rook matrix JSON: order must be positive");
  if (base_id) *base_id = j.value("base", "");
  auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != m.n) throw InputError("rook matrix JSON: row count");
  m.entries.reserve(static_cast<std::size_t>(m.n) * m.n);
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != m.n) throw InputError("rook matrix JSON: row size");
    for (auto& e : row) {
      int v = e.get<int>();
      if (v < 0 || v >= base.size())
        throw InputError("rook matrix JSON: entry out of range");
      m.entries.push_back(v);
    }
  }
  if (!rook_valid(base, m)) throw InputError("rook matrix JSON: constraints violated");
  return m;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace bis
