#pragma once

#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling::detail {

struct SearchOutcome {
  bool solvable = false;
  // Moves in the order they were chosen; the support may contain cycles.
  std::vector<Edge> moves;
  SolveStats stats;
};

// Decides whether the signed configuration `start` can be turned into one
// containing `demand` (negative pebbling allowed).
//
// Every search node picks the lowest-index vertex k that is still short of its
// demand. Any solution from the node's configuration has a move into k, and
// executing that move leaves a configuration the rest of the solution still
// solves, so branching over k's neighbours as the supplier is complete. Each
// move destroys one pebble, so the surplus sum(x - d) bounds the remaining
// depth and a failed configuration can be memoised on its counts alone.
SearchOutcome search_deficits(const Graph& g, std::vector<Count> start, std::span<const Count> demand,
                              const SolverOptions& options);

}  // namespace pebbling::detail
