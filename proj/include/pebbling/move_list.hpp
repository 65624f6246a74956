#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

// Number of pebbling moves per ordered vertex pair (the n_ij counts). Only
// positive counts are stored.
class MoveList {
 public:
  using Key = std::pair<Vertex, Vertex>;

  MoveList() = default;

  // Adds `count` moves from -> to. Zero is a no-op; negative throws.
  void add(Vertex from, Vertex to, Count count = 1);
  // Removes `count` moves; throws if fewer are present.
  void remove(Vertex from, Vertex to, Count count = 1);
  Count get(Vertex from, Vertex to) const;

  bool empty() const { return moves_.empty(); }
  // Number of distinct (from, to) pairs with a positive count.
  std::size_t pair_count() const { return moves_.size(); }
  Count total_moves() const;

  // Sorted by (from, to).
  const std::map<Key, Count>& entries() const { return moves_; }

  // Throws DimensionMismatch on an out-of-range index, EdgeViolation on a non-edge.
  void check_against(const Graph& g) const;

  // Support digraph (pairs with a positive count) has a directed cycle.
  bool has_directed_cycle() const;
  // Vertices of one directed cycle in order, or empty when acyclic.
  std::vector<Vertex> find_directed_cycle() const;

  // Pointwise comparison: every count here is <= the other's.
  bool is_submultiset_of(const MoveList& other) const;

  MoveList& operator+=(const MoveList& other);
  // Pointwise difference; throws std::invalid_argument if it would go negative.
  MoveList operator-(const MoveList& other) const;
  friend MoveList operator+(MoveList a, const MoveList& b) { return a += b; }

  friend bool operator==(const MoveList&, const MoveList&) = default;

 private:
  std::map<Key, Count> moves_;
};

}  // namespace pebbling
