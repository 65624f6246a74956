#include "pebbling/numbers.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <unordered_set>

#include "pebbling/error.hpp"
#include "state_hash.hpp"

namespace pebbling {

namespace {

void colex_fill(std::vector<Count>& current, std::size_t position, Count remaining,
                std::vector<std::vector<Count>>& out) {
  if (position == 0) {
    current[0] = remaining;
    out.push_back(current);
    return;
  }
  for (Count last = 0; last <= remaining; ++last) {
    current[position] = last;
    colex_fill(current, position - 1, remaining - last, out);
  }
  current[position] = 0;
}

}  // namespace

std::vector<std::vector<Count>> compositions(Count total, std::size_t parts) {
  if (total < 0 || parts == 0) throw std::invalid_argument("compositions: bad arguments");
  std::vector<std::vector<Count>> out;
  out.reserve(composition_count(total, parts));
  std::vector<Count> current(parts, 0);
  colex_fill(current, parts - 1, total, out);
  return out;
}

std::uint64_t composition_count(Count total, std::size_t parts) {
  // C(total + parts - 1, parts - 1), saturating.
  const std::uint64_t k = parts - 1;
  WideUnsigned value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (static_cast<std::uint64_t>(total) + i) / i;
    if (value > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(value);
}

LevelScan scan_level_serial(const std::vector<std::vector<Count>>& level, const SolvablePredicate& solvable) {
  LevelScan scan;
  for (std::size_t i = 0; i < level.size(); ++i) {
    ++scan.checked;
    if (!solvable(Configuration(level[i]))) {
      scan.first_unsolvable = i;
      return scan;
    }
  }
  return scan;
}

LevelScan scan_level_parallel(const std::vector<std::vector<Count>>& level, const SolvablePredicate& solvable) {
  const std::int64_t count = static_cast<std::int64_t>(level.size());
  std::atomic<std::int64_t> first{count};
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    // Anything past a known rejection cannot change the answer.
    if (i > first.load(std::memory_order_relaxed)) continue;
    try {
      if (!solvable(Configuration(level[static_cast<std::size_t>(i)]))) {
        std::int64_t seen = first.load();
        while (i < seen && !first.compare_exchange_weak(seen, i)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  LevelScan scan;
  const std::int64_t found = first.load();
  if (found < count) {
    scan.first_unsolvable = static_cast<std::size_t>(found);
    scan.checked = static_cast<std::uint64_t>(found) + 1;
  } else {
    scan.checked = level.size();
  }
  return scan;
}

NumberResult threshold_number(std::size_t vertex_count, const SolvablePredicate& solvable, Count start,
                              std::optional<Count> upper_guard, const NumberOptions& options) {
  using CountSet = std::unordered_set<std::vector<Count>, detail::CountsHash>;
  // Solvable configurations seen one size down (read-only during a level) and
  // at the current size. Adding a pebble keeps a configuration solvable.
  CountSet previous, current;
  std::mutex current_mutex;
  SolvablePredicate with_memo = [&](const Configuration& c) {
    std::vector<Count> counts(c.counts().begin(), c.counts().end());
    bool known = false;
    for (std::size_t v = 0; v < counts.size() && !known; ++v) {
      if (counts[v] == 0) continue;
      --counts[v];
      known = previous.contains(counts);
      ++counts[v];
    }
    const bool ok = known || solvable(c);
    if (ok && options.dominance_memo) {
      std::lock_guard lock(current_mutex);
      if (current.size() < options.memo_limit) current.insert(std::move(counts));
    }
    return ok;
  };

  NumberResult result;
  result.extremal_config = Configuration::zero(vertex_count);
  for (Count k = std::max<Count>(start, 1);; ++k) {
    if (upper_guard && k > *upper_guard)
      throw std::logic_error("sweep passed the proven upper bound " + std::to_string(*upper_guard));
    const std::uint64_t level_size = composition_count(k, vertex_count);
    if (level_size > options.level_limit || result.configs_checked + level_size > options.config_cap)
      throw BudgetExceeded("size-" + std::to_string(k) + " sweep needs " + std::to_string(level_size) +
                           " configurations");
    const auto level = compositions(k, vertex_count);
    const LevelScan scan =
        options.parallel ? scan_level_parallel(level, with_memo) : scan_level_serial(level, with_memo);
    result.configs_checked += scan.checked;
    if (!scan.first_unsolvable) {
      result.value = k;
      return result;
    }
    result.extremal_config = Configuration(level[*scan.first_unsolvable]);
    previous = std::move(current);
    current.clear();
  }
}

Count stacking_lower_bound(const Graph& g, const Demand& d) {
  if (d.vertex_count() != g.size()) throw DimensionMismatch("demand does not match graph");
  Count best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    Count total = 0;
    for (Vertex u = 0; u < g.size(); ++u) {
      if (d[u] == 0) continue;
      const std::size_t dist = g.distance(u, v);
      if (dist >= 62) throw Overflow("stacking bound overflow");
      total = detail::checked_add(total, detail::checked_mul(d[u], Count{1} << dist));
    }
    best = std::max(best, total);
  }
  return best;
}

NumberResult cover_pebbling_number(const Graph& g, const Demand& d, const NumberOptions& options) {
  if (d.vertex_count() != g.size()) throw DimensionMismatch("demand does not match graph");
  if (d.is_zero()) throw ZeroDemand("cover pebbling number of the zero demand is undefined");

  // Largest cover pebbling number for the unit demand on n vertices.
  std::optional<Count> guard;
  if (d.is_unit() && g.size() < 62) guard = (Count{1} << g.size()) - 1;

  const SolverOptions solver = options.solver;
  SolvablePredicate solvable = [&g, &d, solver](const Configuration& c) {
    return is_cover_solvable(g, c, d, solver).solvable();
  };

  Count start = 1;
  if (options.warm_start) {
    // Sizes below the stacking bound always contain an unsolvable stack, so
    // the sweep may begin one below it.
    start = std::max<Count>(1, stacking_lower_bound(g, d) - 1);
  }
  NumberResult result = threshold_number(g.size(), solvable, start, guard, options);
  if (options.warm_start && result.value == start && start > 1) {
    // The warm start overshot; redo from the beginning.
    NumberOptions cold = options;
    cold.warm_start = false;
    return cover_pebbling_number(g, d, cold);
  }
  return result;
}

NumberResult reachability_number(const Graph& g, Vertex target, const NumberOptions& options) {
  return cover_pebbling_number(g, Demand::reach(g.size(), target), options);
}

NumberResult pebbling_number(const Graph& g, const NumberOptions& options) {
  const SolverOptions solver = options.solver;
  SolvablePredicate solvable = [&g, solver](const Configuration& c) {
    return is_canonical_solvable(g, c, solver).solvable;
  };
  return threshold_number(g.size(), solvable, 1, std::nullopt, options);
}

}  // namespace pebbling
