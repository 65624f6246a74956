#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

struct NumberResult {
  Count value = 0;
  // Lowest-colex unsolvable configuration of size value - 1.
  Configuration extremal_config;
  std::uint64_t configs_checked = 0;
};

struct NumberOptions {
  SolverOptions solver;
  // Start the sweep just below stacking_lower_bound instead of at size 1.
  bool warm_start = false;
  // Use the OpenMP sweep; the serial sweep is the reference implementation.
  bool parallel = true;
  // Total configurations examined before BudgetExceeded.
  std::uint64_t config_cap = 50'000'000;
  // Configurations of one size materialised at once.
  std::size_t level_limit = 20'000'000;
  // Treat a configuration as solvable when removing one pebble from it gives a
  // configuration already found solvable one size down.
  bool dominance_memo = true;
  std::size_t memo_limit = 5'000'000;
};

// All compositions of `total` into `parts` non-negative parts, colexicographic
// order: (total,0,..,0) first, (0,..,0,total) last.
std::vector<std::vector<Count>> compositions(Count total, std::size_t parts);
std::uint64_t composition_count(Count total, std::size_t parts);

// Predicate deciding one configuration; must be safe to call concurrently.
using SolvablePredicate = std::function<bool(const Configuration&)>;

struct LevelScan {
  // Colex index of the first configuration the predicate rejected.
  std::optional<std::size_t> first_unsolvable;
  // Configurations up to and including the first rejection (the whole level
  // when nothing was rejected).
  std::uint64_t checked = 0;
};

// Reference scan of one level, in order, stopping at the first rejection.
LevelScan scan_level_serial(const std::vector<std::vector<Count>>& level,
                            const SolvablePredicate& solvable);
// OpenMP scan of one level. Same result as the serial scan for any thread count.
LevelScan scan_level_parallel(const std::vector<std::vector<Count>>& level,
                              const SolvablePredicate& solvable);

// Smallest k such that every size-k configuration satisfies `solvable`; the
// predicate must be monotone (adding pebbles never breaks it).
NumberResult threshold_number(std::size_t vertex_count, const SolvablePredicate& solvable,
                              Count start, std::optional<Count> upper_guard,
                              const NumberOptions& options);

// gamma_G(D). Throws ZeroDemand, BudgetExceeded.
NumberResult cover_pebbling_number(const Graph& g, const Demand& d, const NumberOptions& options = {});
// gamma_G(R_target).
NumberResult reachability_number(const Graph& g, Vertex target, const NumberOptions& options = {});
// pi(G).
NumberResult pebbling_number(const Graph& g, const NumberOptions& options = {});

// max_v sum_u d(u) 2^{dist(u, v)}.
Count stacking_lower_bound(const Graph& g, const Demand& d);

}  // namespace pebbling
