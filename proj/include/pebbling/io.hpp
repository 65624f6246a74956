#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/move_list.hpp"
#include "pebbling/reductions.hpp"
#include "pebbling/x4c.hpp"

namespace pebbling {

// Line-oriented instance document. One directive per line, '#' starts a
// comment:
//
//   vertices NAME...            (exactly once, first directive)
//   edge NAME NAME
//   config NAME COUNT           (omitted vertices hold 0)
//   demand NAME COUNT           (omitted vertices demand 0)
//   demand_kind unit | zero | reach:NAME
//   target NAME
//   threshold COUNT
//   trivial yes
//   role NAME TAG
//
// write_instance emits the canonical form: directives in the order above,
// edges sorted by vertex index, config/demand/role lines in vertex order,
// zero counts omitted.
struct InstanceFile {
  Graph graph;
  Configuration config;
  std::optional<Demand> demand;
  std::optional<Vertex> target;
  std::optional<Count> threshold;
  // Empty, or one role per vertex.
  std::vector<Role> roles;
  bool trivial = false;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile parse_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);
std::string write_instance(const InstanceFile& instance);

InstanceFile to_instance_file(const ReducedInstance& reduced);

// Certificate document: one "FROM TO COUNT" record per line, COUNT >= 1, each
// ordered pair at most once, endpoints adjacent in `g`.
MoveList parse_certificate(std::istream& in, const Graph& g);
MoveList read_certificate_file(const std::string& path, const Graph& g);
std::string write_certificate(const MoveList& moves, const Graph& g);

// X4C document: "n m" on the first line, then m lines of four 1-based elements.
X4CInstance parse_x4c(std::istream& in);
X4CInstance read_x4c_file(const std::string& path);
std::string write_x4c(const X4CInstance& instance);

}  // namespace pebbling
