#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/core.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/move_list.hpp"

namespace pebbling {

enum class Status { Solvable, Unsolvable };

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t max_depth = 0;
};

struct SolveResult {
  Status status = Status::Unsolvable;
  // Present iff Solvable. Verifies and has acyclic support.
  std::optional<MoveList> certificate;
  // Present when the root configuration already has negative gamma there.
  std::optional<Vertex> witness;
  SolveStats stats;

  bool solvable() const { return status == Status::Solvable; }
};

struct SolverOptions {
  std::uint64_t node_cap = 10'000'000;
  // Peel degree-1 vertices before searching.
  bool collapse_leaves = true;
  // Prune search nodes whose configuration has negative gamma somewhere.
  bool gamma_pruning = true;
  // Failed-state memo is not grown past this many entries.
  std::size_t memo_limit = 20'000'000;
};

struct OracleOptions {
  std::uint64_t state_cap = 5'000'000;
};

// Reference decision procedure: breadth-first search over every configuration
// reachable by legal moves. Requires a non-negative configuration. Throws
// BudgetExceeded once more than state_cap configurations have been visited.
bool oracle_solvable(const Graph& g, const Configuration& c, const Demand& d,
                     const OracleOptions& options = {});

// Exact cover-solvability decision. `c` may be extended (signed). Throws
// BudgetExceeded when the node cap is reached; that is never reported as
// Unsolvable.
SolveResult is_cover_solvable(const Graph& g, const Configuration& c, const Demand& d,
                              const SolverOptions& options = {});

SolveResult is_reachable(const Graph& g, const Configuration& c, Vertex target,
                         const SolverOptions& options = {});

struct CanonicalResult {
  bool solvable = false;
  // Ascending.
  std::vector<Vertex> unreachable;
  SolveStats stats;
};

CanonicalResult is_canonical_solvable(const Graph& g, const Configuration& c,
                                      const SolverOptions& options = {});

// Cancels directed cycles in the support of a verifying move list. Throws
// NotASolution if `moves` does not solve (g, c, d).
MoveList normalize_acyclic(const Graph& g, const Configuration& c, const Demand& d,
                           MoveList moves);

struct Collapsed {
  Graph graph;
  Configuration config;
  Demand demand;
  // original_index[i] is the vertex of the input graph that became vertex i.
  std::vector<Vertex> original_index;
};

// Removes degree-1 vertex `leaf`, crediting floor((c-d)/2) of its surplus to
// its neighbour or debiting twice its deficit. Throws NotALeaf, SingletonGraph.
Collapsed collapse_leaf(const Graph& g, const Configuration& c, const Demand& d, Vertex leaf);

// Decides solvability on a tree by collapsing the lowest-index leaf until one
// vertex remains. Throws NotATree.
bool solve_tree(const Graph& g, const Configuration& c, const Demand& d);

}  // namespace pebbling
