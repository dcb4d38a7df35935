#include "sdist/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace sdist {

namespace toml {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string drop_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

Value parse_value(const std::string& raw, int lineno) {
  const std::string s = strip(raw);
  if (s.empty())
    throw ConfigError("line " + std::to_string(lineno) + ": missing value");
  Value v{};
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      throw ConfigError("line " + std::to_string(lineno) + ": bad string");
    v.kind = Value::Kind::String;
    v.string = s.substr(1, s.size() - 2);
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = Value::Kind::Boolean;
    v.boolean = s == "true";
    return v;
  }
  if (s.front() == '[') {
    if (s.back() != ']')
      throw ConfigError("line " + std::to_string(lineno) + ": bad array");
    v.kind = Value::Kind::NumberArray;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = strip(item);
      if (item.empty()) continue;
      std::size_t used = 0;
      v.array.push_back(std::stod(item, &used));
      if (used != item.size())
        throw ConfigError("line " + std::to_string(lineno) +
                          ": bad array element '" + item + "'");
    }
    return v;
  }
  std::size_t used = 0;
  try {
    v.number = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size())
    throw ConfigError("line " + std::to_string(lineno) + ": bad value '" + s +
                      "'");
  v.kind = Value::Kind::Number;
  return v;
}

}  // namespace

Document parse(const std::string& text) {
  Document doc;
  Table* current = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.size() > 4 && line.substr(0, 2) == "[[" &&
          line.substr(line.size() - 2) == "]]") {
        const std::string name = strip(line.substr(2, line.size() - 4));
        doc.table_arrays[name].emplace_back();
        current = &doc.table_arrays[name].back();
        continue;
      }
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": bad section header");
      const std::string name = strip(line.substr(1, line.size() - 2));
      current = &doc.sections[name];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    if (current == nullptr)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key outside any section");
    const std::string key = strip(line.substr(0, eq));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (current->count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                        key + "'");
    (*current)[key] = parse_value(line.substr(eq + 1), lineno);
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace toml

namespace {

using toml::Table;
using toml::Value;

// Tracks which keys were consumed so leftovers can be rejected.
class TableReader {
 public:
  TableReader(const Table& t, std::string name)
      : table_(t), name_(std::move(name)) {}

  bool has(const std::string& key) const { return table_.count(key) > 0; }

  const Value& get(const std::string& key, Value::Kind kind) {
    auto it = table_.find(key);
    if (it == table_.end())
      throw ConfigError("[" + name_ + "] missing key '" + key + "'");
    if (it->second.kind != kind)
      throw ConfigError("[" + name_ + "] key '" + key + "' has the wrong type");
    used_.insert(key);
    return it->second;
  }

  double number(const std::string& key) {
    return get(key, Value::Kind::Number).number;
  }
  double number_or(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }
  std::string string(const std::string& key) {
    return get(key, Value::Kind::String).string;
  }
  std::string string_or(const std::string& key, const std::string& fallback) {
    return has(key) ? string(key) : fallback;
  }
  std::vector<double> array(const std::string& key) {
    return get(key, Value::Kind::NumberArray).array;
  }

  void reject_unknown() const {
    for (const auto& [key, value] : table_)
      if (!used_.count(key))
        throw ConfigError("[" + name_ + "] unknown key '" + key + "'");
  }

 private:
  const Table& table_;
  std::string name_;
  std::set<std::string> used_;
};

Point to_point(const std::vector<double>& v, int dim, const std::string& what) {
  if (static_cast<int>(v.size()) != dim)
    throw ConfigError(what + " needs " + std::to_string(dim) + " coordinates");
  Point p{v[0], 0.0};
  if (dim == 2) p[1] = v[1];
  return p;
}

Shape build_shape(TableReader& sh, int dim,
                  const std::vector<Table>* members) {
  const std::string type = sh.string("type");
  if (type == "interval") {
    if (dim != 1) throw ConfigError("interval shape needs a 1D domain");
    Shape s{Interval{sh.number("center"), sh.number("half_width")}};
    sh.reject_unknown();
    return s;
  }
  if (type == "ball") {
    if (dim != 2) throw ConfigError("ball shape needs a 2D domain");
    Shape s{Ball{to_point(sh.array("center"), 2, "ball center"),
                 sh.number("radius")}};
    sh.reject_unknown();
    return s;
  }
  if (type == "annulus") {
    if (dim != 2) throw ConfigError("annulus shape needs a 2D domain");
    Shape s{Annulus{to_point(sh.array("center"), 2, "annulus center"),
                    sh.number("r_inner"), sh.number("r_outer")}};
    sh.reject_unknown();
    return s;
  }
  if (type == "box") {
    BoxShape b;
    b.dim = dim;
    b.lo = to_point(sh.array("lo"), dim, "box lo");
    b.hi = to_point(sh.array("hi"), dim, "box hi");
    sh.reject_unknown();
    return Shape{b};
  }
  if (type == "union") {
    sh.reject_unknown();
    if (members == nullptr || members->empty())
      throw ConfigError("union shape needs [[shape.members]] entries");
    ShapeUnion u;
    for (const auto& m : *members) {
      TableReader r(m, "shape.members");
      u.members.push_back(build_shape(r, dim, nullptr));
    }
    return Shape{std::move(u)};
  }
  throw ConfigError("unknown shape type '" + type + "'");
}

}  // namespace

LoadedConfig parse_config(const std::string& text) {
  toml::Document doc = toml::parse(text);
  const std::set<std::string> known = {"domain", "shape", "source", "boundary",
                                       "sweep", "mean"};
  for (const auto& [name, table] : doc.sections)
    if (!known.count(name))
      throw ConfigError("unknown config section [" + name + "]");
  for (const auto& [name, tables] : doc.table_arrays)
    if (name != "shape.members")
      throw ConfigError("unknown config table array [[" + name + "]]");

  auto section = [&](const std::string& name) -> const Table& {
    auto it = doc.sections.find(name);
    if (it == doc.sections.end())
      throw ConfigError("missing config section [" + name + "]");
    return it->second;
  };

  // [domain]
  TableReader dom(section("domain"), "domain");
  const auto lo = dom.array("lo");
  const auto hi = dom.array("hi");
  if (lo.size() != hi.size() || lo.empty() || lo.size() > 2)
    throw ConfigError("[domain] lo/hi must both have 1 or 2 entries");
  const int dim = static_cast<int>(lo.size());
  dom.reject_unknown();
  BoxShape omega{to_point(lo, dim, "domain lo"), to_point(hi, dim, "domain hi"),
                 dim};

  // [shape]
  TableReader sh(section("shape"), "shape");
  const auto* members = doc.table_arrays.count("shape.members")
                            ? &doc.table_arrays.at("shape.members")
                            : nullptr;
  Shape shape = build_shape(sh, dim, members);

  // [source]
  TableReader src(section("source"), "source");
  const std::string stype = src.string("type");
  std::optional<SourceSpec> source;
  if (stype == "indicator") {
    source.emplace(IndicatorComplement{shape, src.number_or("amplitude", 1.0)});
  } else if (stype == "power_law_ball") {
    const auto* ball = std::get_if<Ball>(&shape.v);
    if (ball == nullptr)
      throw ConfigError("power_law_ball source needs a ball shape");
    source.emplace(PowerLawBall{*ball, src.number("zeta")});
  } else if (stype == "power_law_1d") {
    const auto* iv = std::get_if<Interval>(&shape.v);
    if (iv == nullptr || iv->center != 0.0)
      throw ConfigError("power_law_1d source needs an origin-centered interval");
    source.emplace(PowerLaw1D{iv->half_width, src.number("zeta")});
  } else {
    throw ConfigError("unknown source type '" + stype + "'");
  }
  src.reject_unknown();

  // [boundary]
  TableReader bnd(section("boundary"), "boundary");
  if (bnd.string("type") != "constant")
    throw ConfigError("config boundary type must be 'constant'");
  BoundarySpec boundary{BoundaryConstant{bnd.number("value")}};
  if (std::get<BoundaryConstant>(boundary.v).value < 0.0)
    throw ConfigError("boundary value must be nonnegative");
  bnd.reject_unknown();

  // [sweep]
  TableReader sw(section("sweep"), "sweep");
  CaseSpec spec{DesignDomain(omega, shape),
                *source,
                boundary,
                sw.array("a"),
                GridRule{},
                OracleKind::Exact,
                TransformKind::Distance,
                std::nullopt,
                1e-10,
                50000};
  const std::string gmode = sw.string_or("grid", "tied");
  if (gmode == "tied") {
    spec.grid_rule.tied = true;
    spec.grid_rule.spacing_factor = sw.number_or("spacing_factor", 8.0);
  } else if (gmode == "fixed") {
    spec.grid_rule.tied = false;
    spec.grid_rule.fixed_nodes = static_cast<int>(sw.number("fixed_nodes"));
  } else {
    throw ConfigError("[sweep] grid must be 'tied' or 'fixed'");
  }
  const std::string tmode = sw.string_or("transform", "distance");
  if (tmode == "distance")
    spec.transform = TransformKind::Distance;
  else if (tmode == "signed")
    spec.transform = TransformKind::Signed;
  else
    throw ConfigError("[sweep] transform must be 'distance' or 'signed'");
  const std::string omode = sw.string_or("oracle", "exact");
  if (omode == "exact")
    spec.oracle = OracleKind::Exact;
  else if (omode == "brute-force")
    spec.oracle = OracleKind::BruteForce;
  else
    throw ConfigError("[sweep] oracle must be 'exact' or 'brute-force'");
  if (sw.has("c_star")) spec.c_star = sw.number("c_star");
  spec.tolerance = sw.number_or("tolerance", 1e-10);
  spec.max_iterations = static_cast<int>(sw.number_or("max_iterations", 50000));
  sw.reject_unknown();

  LoadedConfig loaded{std::move(spec), MeanScanSettings{}};

  // [mean] (optional)
  if (doc.sections.count("mean")) {
    TableReader mn(doc.sections.at("mean"), "mean");
    loaded.mean.eps = mn.array("eps");
    loaded.mean.boundary_samples =
        static_cast<int>(mn.number_or("boundary_samples", 64));
    loaded.mean.grid_nodes = static_cast<int>(mn.number_or("grid_nodes", 1025));
    mn.reject_unknown();
  }

  loaded.spec.validate();
  return loaded;
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace sdist
