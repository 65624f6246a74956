#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/move_list.hpp"

namespace pebbling {

// Exact dyadic rational numerator / 2^log2_denominator.
struct PotentialValue {
  WideCount numerator = 0;
  unsigned log2_denominator = 0;

  int sign() const { return numerator > 0 ? 1 : (numerator < 0 ? -1 : 0); }
  bool negative() const { return numerator < 0; }
  double approx() const;
  // "numerator/2^k", or just the numerator when k == 0.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const PotentialValue& a, const PotentialValue& b);
  friend bool operator==(const PotentialValue& a, const PotentialValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

std::string wide_to_string(WideCount value);

// Per-vertex balance C(v_k) + sum_l n_lk - 2 sum_l n_kl after executing `moves`
// with negative pebbling allowed. The result is always flagged extended.
Configuration apply_moves(const Graph& g, const Configuration& c, const MoveList& moves);

// First vertex whose inequality C(v_k) + in_k - 2 out_k >= D(v_k) fails, or
// nullopt when the move list solves (g, c, d).
std::optional<Vertex> first_violation(const Graph& g, const Configuration& c, const Demand& d,
                                      const MoveList& moves);

// Certificate check: true iff every per-vertex inequality holds.
bool verify_solution(const Graph& g, const Configuration& c, const Demand& d,
                     const MoveList& moves);

// All legal single moves (from, to) with c(from) >= 2, ascending by (from, to).
std::vector<Edge> legal_moves(const Graph& g, const Configuration& c);

// Gamma_C(v) = sum_u (C(u) - D(u)) 2^{-dist(u, v)}, scaled by 2^ecc(v).
PotentialValue gamma(const Graph& g, const Configuration& c, const Demand& d, Vertex v);

// Lowest-index vertex with negative gamma. A result proves (g, c, d) unsolvable.
std::optional<Vertex> gamma_witness(const Graph& g, const Configuration& c, const Demand& d);

}  // namespace pebbling
