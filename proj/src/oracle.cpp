#include <deque>
#include <unordered_set>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"
#include "state_hash.hpp"

namespace pebbling {

bool oracle_solvable(const Graph& g, const Configuration& c, const Demand& d, const OracleOptions& options) {
  if (c.vertex_count() != g.size() || d.vertex_count() != g.size())
    throw DimensionMismatch("configuration, demand, and graph index different vertex sets");
  if (!c.non_negative()) throw NegativeCount("oracle requires a non-negative configuration");

  auto covers = [&](const std::vector<Count>& x) {
    for (Vertex v = 0; v < x.size(); ++v)
      if (x[v] < d[v]) return false;
    return true;
  };

  std::vector<Count> start(c.counts().begin(), c.counts().end());
  std::unordered_set<std::vector<Count>, detail::CountsHash> visited{start};
  std::deque<std::vector<Count>> frontier{std::move(start)};
  while (!frontier.empty()) {
    std::vector<Count> x = std::move(frontier.front());
    frontier.pop_front();
    if (covers(x)) return true;
    for (Vertex u = 0; u < g.size(); ++u) {
      if (x[u] < 2) continue;
      for (Vertex w : g.neighbors(u)) {
        std::vector<Count> next = x;
        next[u] -= 2;
        next[w] += 1;
        if (!visited.insert(next).second) continue;
        if (visited.size() > options.state_cap)
          throw BudgetExceeded("oracle visited more than " + std::to_string(options.state_cap) + " configurations");
        frontier.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace pebbling
