#include "pebbling/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

}  // namespace

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges) : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InvalidGraph("graph has no vertices");
  {
    std::set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw InvalidGraph("empty vertex name");
      if (!seen.insert(name).second) throw InvalidGraph("duplicate vertex name '" + name + "'");
    }
  }

  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("self-loop at '" + names_[u] + "'");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidGraph("parallel edge");
  edges_ = std::move(edges);

  adjacency_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  distance_.assign(n * n, kUnreached);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t* row = &distance_[s * n];
    std::queue<Vertex> frontier;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : adjacency_[u]) {
        if (row[w] != kUnreached) continue;
        row[w] = row[u] + 1;
        frontier.push(w);
      }
    }
    if (std::find(row, row + n, kUnreached) != row + n) throw InvalidGraph("graph is not connected");
  }
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  return Graph(default_names(n), std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edges(n, std::move(edges));
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return from_edges(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw InvalidGraph("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges(n, std::move(edges));
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return from_edges(leaves + 1, std::move(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::eccentricity(Vertex v) const {
  const std::size_t* row = &distance_[v * size()];
  return *std::max_element(row, row + size());
}

std::size_t Graph::diameter() const {
  return *std::max_element(distance_.begin(), distance_.end());
}

std::optional<Vertex> Graph::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::size_t> position(size(), kUnreached);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= size()) throw InvalidGraph("induced: vertex out of range");
    if (position[keep[i]] != kUnreached) throw InvalidGraph("induced: repeated vertex");
    position[keep[i]] = i;
    names.push_back(names_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : edges_)
    if (position[u] != kUnreached && position[v] != kUnreached) edges.emplace_back(position[u], position[v]);
  return Graph(std::move(names), std::move(edges));
}

}  // namespace pebbling
