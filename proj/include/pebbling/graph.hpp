#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Connected simple undirected graph. Vertices are indices 0..size()-1; names
// exist only for I/O. All-pairs distances are computed once at construction.
class Graph {
 public:
  // Throws InvalidGraph on self-loops, parallel edges, out-of-range endpoints,
  // duplicate names, zero vertices, or a disconnected result.
  Graph(std::vector<std::string> names, std::vector<Edge> edges);

  // Vertices named v1..vn.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);
  static Graph path(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  // Vertex 0 is the center.
  static Graph star(std::size_t leaves);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // Sorted (u < v) edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t distance(Vertex u, Vertex v) const { return distance_[u * size() + v]; }
  std::size_t eccentricity(Vertex v) const;
  std::size_t diameter() const;

  bool is_tree() const { return edges_.size() + 1 == size(); }

  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> index_of(const std::string& name) const;

  // Subgraph induced by `keep` (in the given order). Throws InvalidGraph if it
  // is empty or disconnected.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::size_t> distance_;
};

}  // namespace pebbling
