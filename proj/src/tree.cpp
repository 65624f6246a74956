#include <algorithm>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

Collapsed collapse_leaf(const Graph& g, const Configuration& c, const Demand& d, Vertex leaf) {
  if (c.vertex_count() != g.size() || d.vertex_count() != g.size())
    throw DimensionMismatch("configuration, demand, and graph index different vertex sets");
  if (leaf >= g.size()) throw DimensionMismatch("leaf out of range");
  if (g.size() == 1) throw SingletonGraph("cannot remove the only vertex");
  if (g.degree(leaf) != 1) throw NotALeaf(g.name(leaf) + " does not have degree 1");

  const Vertex parent = g.neighbors(leaf).front();
  const Count surplus = detail::checked_add(c[leaf], -d[leaf]);
  const Count credit = surplus >= 0 ? surplus / 2 : detail::checked_mul(2, surplus);

  Collapsed out{g, Configuration{}, Demand{}, {}};
  std::vector<Count> counts, demand;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v == leaf) continue;
    out.original_index.push_back(v);
    counts.push_back(v == parent ? detail::checked_add(c[v], credit) : c[v]);
    demand.push_back(d[v]);
  }
  const bool extended = c.extended() || std::any_of(counts.begin(), counts.end(), [](Count x) { return x < 0; });
  out.graph = g.induced(out.original_index);
  out.config = Configuration(std::move(counts), extended);
  out.demand = Demand(std::move(demand));
  return out;
}

bool solve_tree(const Graph& g, const Configuration& c, const Demand& d) {
  if (!g.is_tree()) throw NotATree("graph has a cycle");
  Graph graph = g;
  Configuration config = c;
  Demand demand = d;
  while (graph.size() > 1) {
    Vertex leaf = 0;
    while (graph.degree(leaf) != 1) ++leaf;
    Collapsed next = collapse_leaf(graph, config, demand, leaf);
    graph = std::move(next.graph);
    config = std::move(next.config);
    demand = std::move(next.demand);
  }
  return config[0] >= demand[0];
}

}  // namespace pebbling
