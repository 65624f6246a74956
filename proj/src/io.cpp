#include "pebbling/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Count parse_count(const std::string& text, std::size_t line) {
  Count value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected an integer, got '" + text + "'");
  return value;
}

std::size_t parse_index(const std::string& text, std::size_t line) {
  const Count value = parse_count(text, line);
  if (value < 0) throw ParseError(line, "expected a non-negative integer, got '" + text + "'");
  return static_cast<std::size_t>(value);
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity)
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(arity - 1) + " argument(s)");
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty() || lines.front().tokens[0] != "vertices")
    throw ParseError(lines.empty() ? 0 : lines.front().number, "instance must start with 'vertices'");

  const Line& header = lines.front();
  std::vector<std::string> names(header.tokens.begin() + 1, header.tokens.end());
  if (names.empty()) throw ParseError(header.number, "no vertices declared");
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < names.size(); ++v)
    if (!index.emplace(names[v], v).second) throw ParseError(header.number, "duplicate vertex '" + names[v] + "'");

  auto vertex = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown vertex '" + name + "'");
    return it->second;
  };

  std::vector<Edge> edges;
  std::vector<Count> config(names.size(), 0), demand(names.size(), 0);
  std::vector<bool> config_set(names.size(), false), demand_set(names.size(), false);
  bool any_demand = false;
  std::optional<std::string> demand_kind;
  std::size_t demand_kind_line = 0;
  std::optional<Vertex> target;
  std::optional<Count> threshold;
  bool trivial = false;
  std::vector<std::optional<Role>> roles(names.size());
  bool any_role = false;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens[0];
    if (key == "edge") {
      expect_arity(line, 3);
      edges.emplace_back(vertex(line.tokens[1], line.number), vertex(line.tokens[2], line.number));
    } else if (key == "config") {
      expect_arity(line, 3);
      const Vertex v = vertex(line.tokens[1], line.number);
      if (config_set[v]) throw ParseError(line.number, "config for '" + line.tokens[1] + "' given twice");
      config_set[v] = true;
      config[v] = parse_count(line.tokens[2], line.number);
    } else if (key == "demand") {
      expect_arity(line, 3);
      const Vertex v = vertex(line.tokens[1], line.number);
      if (demand_set[v]) throw ParseError(line.number, "demand for '" + line.tokens[1] + "' given twice");
      demand_set[v] = true;
      demand[v] = parse_count(line.tokens[2], line.number);
      if (demand[v] < 0) throw ParseError(line.number, "demand must be non-negative");
      any_demand = true;
    } else if (key == "demand_kind") {
      expect_arity(line, 2);
      if (demand_kind) throw ParseError(line.number, "demand_kind given twice");
      demand_kind = line.tokens[1];
      demand_kind_line = line.number;
    } else if (key == "target") {
      expect_arity(line, 2);
      if (target) throw ParseError(line.number, "target given twice");
      target = vertex(line.tokens[1], line.number);
    } else if (key == "threshold") {
      expect_arity(line, 2);
      if (threshold) throw ParseError(line.number, "threshold given twice");
      threshold = parse_count(line.tokens[1], line.number);
    } else if (key == "trivial") {
      expect_arity(line, 2);
      if (line.tokens[1] != "yes") throw ParseError(line.number, "trivial takes 'yes'");
      trivial = true;
    } else if (key == "role") {
      expect_arity(line, 3);
      const Vertex v = vertex(line.tokens[1], line.number);
      auto role = role_from_tag(line.tokens[2]);
      if (!role) throw ParseError(line.number, "unknown role '" + line.tokens[2] + "'");
      if (roles[v]) throw ParseError(line.number, "role for '" + line.tokens[1] + "' given twice");
      roles[v] = role;
      any_role = true;
    } else if (key == "vertices") {
      throw ParseError(line.number, "'vertices' given twice");
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }

  std::optional<Graph> graph;
  try {
    graph.emplace(names, edges);
  } catch (const InvalidGraph& e) {
    throw ParseError(0, std::string("invalid graph: ") + e.what());
  }

  InstanceFile out{*graph, Configuration(config, /*extended=*/true), std::nullopt, target, threshold, {}, trivial};
  if (out.config.non_negative()) out.config = Configuration(config);

  if (demand_kind && any_demand)
    throw ParseError(demand_kind_line, "use either demand_kind or demand lines, not both");
  if (demand_kind) {
    const std::string& kind = *demand_kind;
    if (kind == "unit") {
      out.demand = Demand::unit(names.size());
    } else if (kind == "zero") {
      out.demand = Demand::zero(names.size());
    } else if (kind.rfind("reach:", 0) == 0) {
      out.demand = Demand::reach(names.size(), vertex(kind.substr(6), demand_kind_line));
    } else {
      throw ParseError(demand_kind_line, "demand_kind must be unit, zero, or reach:NAME");
    }
  } else if (any_demand) {
    out.demand = Demand(demand);
  }

  if (any_role) {
    for (Vertex v = 0; v < names.size(); ++v) {
      if (!roles[v]) throw ParseError(0, "vertex '" + names[v] + "' has no role");
      out.roles.push_back(*roles[v]);
    }
  }
  return out;
}

InstanceFile read_instance_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_instance(in);
}

std::string write_instance(const InstanceFile& instance) {
  const Graph& g = instance.graph;
  std::ostringstream out;
  out << "vertices";
  for (const auto& name : g.names()) out << ' ' << name;
  out << '\n';
  for (const auto& [u, v] : g.edges()) out << "edge " << g.name(u) << ' ' << g.name(v) << '\n';
  for (Vertex v = 0; v < g.size(); ++v)
    if (instance.config[v] != 0) out << "config " << g.name(v) << ' ' << instance.config[v] << '\n';
  if (instance.demand) {
    const Demand& d = *instance.demand;
    if (d.is_unit()) {
      out << "demand_kind unit\n";
    } else if (d.is_zero()) {
      out << "demand_kind zero\n";
    } else if (auto t = d.reach_target()) {
      out << "demand_kind reach:" << g.name(*t) << '\n';
    } else {
      for (Vertex v = 0; v < g.size(); ++v)
        if (d[v] != 0) out << "demand " << g.name(v) << ' ' << d[v] << '\n';
    }
  }
  if (instance.target) out << "target " << g.name(*instance.target) << '\n';
  if (instance.threshold) out << "threshold " << *instance.threshold << '\n';
  if (instance.trivial) out << "trivial yes\n";
  for (Vertex v = 0; v < instance.roles.size(); ++v)
    out << "role " << g.name(v) << ' ' << role_tag(instance.roles[v]) << '\n';
  return out.str();
}

InstanceFile to_instance_file(const ReducedInstance& reduced) {
  return InstanceFile{reduced.graph, reduced.config, reduced.demand, reduced.target,
                      reduced.threshold, reduced.roles, reduced.trivial};
}

MoveList parse_certificate(std::istream& in, const Graph& g) {
  MoveList moves;
  for (const Line& line : tokenize(in)) {
    if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'FROM TO COUNT'");
    const auto from = g.index_of(line.tokens[0]);
    const auto to = g.index_of(line.tokens[1]);
    if (!from) throw ParseError(line.number, "unknown vertex '" + line.tokens[0] + "'");
    if (!to) throw ParseError(line.number, "unknown vertex '" + line.tokens[1] + "'");
    if (!g.has_edge(*from, *to))
      throw ParseError(line.number, "'" + line.tokens[0] + "' and '" + line.tokens[1] + "' are not adjacent");
    const Count count = parse_count(line.tokens[2], line.number);
    if (count < 1) throw ParseError(line.number, "move count must be at least 1");
    if (moves.get(*from, *to) != 0)
      throw ParseError(line.number, "pair " + line.tokens[0] + " -> " + line.tokens[1] + " listed twice");
    moves.add(*from, *to, count);
  }
  return moves;
}

MoveList read_certificate_file(const std::string& path, const Graph& g) {
  auto in = open_or_throw(path);
  return parse_certificate(in, g);
}

std::string write_certificate(const MoveList& moves, const Graph& g) {
  std::ostringstream out;
  for (const auto& [key, count] : moves.entries())
    out << g.name(key.first) << ' ' << g.name(key.second) << ' ' << count << '\n';
  return out.str();
}

X4CInstance parse_x4c(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty X4C document");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "expected 'n m'");
  const std::size_t n = parse_index(header.tokens[0], header.number);
  const std::size_t m = parse_index(header.tokens[1], header.number);
  if (lines.size() != m + 1)
    throw ParseError(lines.size() > m + 1 ? lines[m + 1].number : header.number,
                     "expected " + std::to_string(m) + " set lines, found " + std::to_string(lines.size() - 1));

  std::vector<X4CInstance::Set> sets;
  for (std::size_t i = 1; i <= m; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 4) throw ParseError(line.number, "a set has exactly 4 elements");
    X4CInstance::Set s{};
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t e = parse_index(line.tokens[k], line.number);
      if (e == 0 || e > 4 * n) throw ParseError(line.number, "element " + line.tokens[k] + " outside 1.." + std::to_string(4 * n));
      s[k] = e - 1;
    }
    sets.push_back(s);
  }
  try {
    return X4CInstance(n, std::move(sets));
  } catch (const MalformedInstance& e) {
    throw ParseError(0, e.what());
  }
}

X4CInstance read_x4c_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_x4c(in);
}

std::string write_x4c(const X4CInstance& instance) {
  std::ostringstream out;
  out << instance.n() << ' ' << instance.m() << '\n';
  for (const auto& s : instance.sets()) out << s[0] + 1 << ' ' << s[1] + 1 << ' ' << s[2] + 1 << ' ' << s[3] + 1 << '\n';
  return out.str();
}

}  // namespace pebbling
