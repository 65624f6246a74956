#include "pebbling/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "pebbling/error.hpp"
#include "search.hpp"

namespace pebbling {

namespace {

struct Peeled {
  std::vector<Vertex> core;  // ascending
  std::vector<Count> config;  // full length, core entries updated
  MoveList moves;             // leaf moves, original indices
};

// Repeatedly removes the lowest-index degree-1 vertex, settling it against its
// neighbour: surplus s >= 0 sends floor(s/2) moves inward, a deficit pulls in
// exactly the missing pebbles.
Peeled peel_leaves(const Graph& g, std::span<const Count> config, const Demand& d) {
  const std::size_t n = g.size();
  Peeled out;
  out.config.assign(config.begin(), config.end());
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

  std::size_t remaining = n;
  while (remaining > 1) {
    std::optional<Vertex> leaf;
    for (Vertex v = 0; v < n && !leaf; ++v)
      if (!removed[v] && degree[v] == 1) leaf = v;
    if (!leaf) break;

    Vertex parent = 0;
    for (Vertex w : g.neighbors(*leaf))
      if (!removed[w]) parent = w;

    const Count surplus = detail::checked_add(out.config[*leaf], -d[*leaf]);
    if (surplus >= 0) {
      const Count sent = surplus / 2;
      out.moves.add(*leaf, parent, sent);
      out.config[*leaf] -= 2 * sent;
      out.config[parent] = detail::checked_add(out.config[parent], sent);
    } else {
      out.moves.add(parent, *leaf, -surplus);
      out.config[*leaf] = d[*leaf];
      out.config[parent] = detail::checked_add(out.config[parent], detail::checked_mul(2, surplus));
    }
    removed[*leaf] = true;
    --degree[parent];
    --remaining;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) out.core.push_back(v);
  return out;
}

void check_inputs(const Graph& g, const Configuration& c, const Demand& d) {
  if (c.vertex_count() != g.size() || d.vertex_count() != g.size())
    throw DimensionMismatch("configuration, demand, and graph index different vertex sets");
}

void merge_stats(SolveStats& into, const SolveStats& from) {
  into.nodes_expanded += from.nodes_expanded;
  into.max_depth = std::max(into.max_depth, from.max_depth);
}

}  // namespace

SolveResult is_cover_solvable(const Graph& g, const Configuration& c, const Demand& d,
                              const SolverOptions& options) {
  check_inputs(g, c, d);
  SolveResult result;
  if (c.contains(d)) {
    result.status = Status::Solvable;
    result.certificate = MoveList{};
    return result;
  }
  if (options.gamma_pruning) {
    if (auto witness = gamma_witness(g, c, d)) {
      result.witness = witness;
      return result;
    }
  }

  std::vector<Count> start(c.counts().begin(), c.counts().end());
  MoveList moves;
  std::vector<Vertex> core(g.size());
  for (Vertex v = 0; v < g.size(); ++v) core[v] = v;
  if (options.collapse_leaves) {
    Peeled peeled = peel_leaves(g, start, d);
    start = std::move(peeled.config);
    moves = std::move(peeled.moves);
    core = std::move(peeled.core);
  }

  const Graph core_graph = core.size() == g.size() ? g : g.induced(core);
  std::vector<Count> core_config, core_demand;
  for (Vertex v : core) {
    core_config.push_back(start[v]);
    core_demand.push_back(d[v]);
  }
  detail::SearchOutcome outcome = detail::search_deficits(core_graph, std::move(core_config), core_demand, options);
  result.stats = outcome.stats;
  if (!outcome.solvable) return result;

  for (const auto& [from, to] : outcome.moves) moves.add(core[from], core[to]);
  moves = normalize_acyclic(g, c, d, std::move(moves));
  if (moves.has_directed_cycle() || !verify_solution(g, c, d, moves))
    throw std::logic_error("search produced an invalid certificate");
  result.status = Status::Solvable;
  result.certificate = std::move(moves);
  return result;
}

SolveResult is_reachable(const Graph& g, const Configuration& c, Vertex target, const SolverOptions& options) {
  if (target >= g.size()) throw DimensionMismatch("reach target out of range");
  return is_cover_solvable(g, c, Demand::reach(g.size(), target), options);
}

CanonicalResult is_canonical_solvable(const Graph& g, const Configuration& c, const SolverOptions& options) {
  if (c.vertex_count() != g.size()) throw DimensionMismatch("configuration does not match graph");
  if (!c.non_negative()) throw NegativeCount("canonical solvability needs a non-negative configuration");
  CanonicalResult result;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (c[v] >= 1) continue;
    SolveResult r = is_reachable(g, c, v, options);
    merge_stats(result.stats, r.stats);
    if (!r.solvable()) result.unreachable.push_back(v);
  }
  result.solvable = result.unreachable.empty();
  return result;
}

MoveList normalize_acyclic(const Graph& g, const Configuration& c, const Demand& d, MoveList moves) {
  check_inputs(g, c, d);
  if (!verify_solution(g, c, d, moves)) throw NotASolution("move list does not solve the configuration");
  // Cancelling a cycle's minimum count at once is the same as cancelling one
  // move around it that many times; each cycle vertex gains a pebble per round.
  for (auto cycle = moves.find_directed_cycle(); !cycle.empty(); cycle = moves.find_directed_cycle()) {
    Count lowest = moves.get(cycle.back(), cycle.front());
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) lowest = std::min(lowest, moves.get(cycle[i], cycle[i + 1]));
    for (std::size_t i = 0; i < cycle.size(); ++i) moves.remove(cycle[i], cycle[(i + 1) % cycle.size()], lowest);
  }
  return moves;
}

}  // namespace pebbling
