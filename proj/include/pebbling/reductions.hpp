#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/move_list.hpp"
#include "pebbling/x4c.hpp"

namespace pebbling {

enum class Role {
  T,             // element vertex t_j
  B,             // set vertex b_i
  BPrime,        // b_i'
  BDoublePrime,  // b_i''
  BTriplePrime,  // b_i'''
  V,             // hub / target v
  PathInterior,  // vertices strictly between v and w
  W,             // far end w of the cover-solvability path
  U,             // u_ij on the path from v_i' to w_0
  WChain,        // w_0 .. w_n
  H,             // copy of the source graph
  Trivial,       // the single vertex of a trivially solvable translation
};

std::string_view role_tag(Role role);
std::optional<Role> role_from_tag(std::string_view tag);

struct ReducedInstance {
  Graph graph;
  Configuration config;
  // Unit for cover solvability, R_target for the reachability-style reductions.
  Demand demand;
  std::optional<Vertex> target;
  // Only for the pebbling-number reduction: gamma(R_v) > threshold iff a cover exists.
  std::optional<Count> threshold;
  // One role per vertex, indexed by vertex.
  std::vector<Role> roles;
  // Cover-to-canonical translation replaced the input with a trivial yes-instance.
  bool trivial = false;

  friend bool operator==(const ReducedInstance&, const ReducedInstance&) = default;
};

// Cover solvability for the unit demand. Vertex order: t_1..t_4n, b_1..b_m,
// b_1'..b_m', b_1''..b_m'', v, interior path vertices, w (absent when m == n).
ReducedInstance reduce_to_cover_solvability(const X4CInstance& instance);

// Explicit unit-demand solution on the instance above built from an exact cover.
// Throws NotACover.
MoveList cover_certificate_from_exact_cover(const X4CInstance& instance,
                                            const std::vector<std::size_t>& cover);

// Unit cover solvability of (g, c) to canonical solvability. Vertex order:
// copy of g, u_11..u_1n, .., u_n1..u_nn, w_0, w_1..w_n; target w_n.
ReducedInstance reduce_cover_to_canonical(const Graph& g, const Configuration& c);

// gamma(R_v) threshold instance. Vertex order: t_1..t_4n, b_1..b_m, b', b'',
// b''', v; threshold 15m + 16n.
ReducedInstance reduce_to_number_threshold(const X4CInstance& instance);

// 31 pebbles on b_i''' for covering sets, 15 on the others. Throws NotACover.
Configuration number_witness_config(const X4CInstance& instance,
                                    const std::vector<std::size_t>& cover);

}  // namespace pebbling
