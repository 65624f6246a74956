#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

using Count = std::int64_t;
// Intermediate width for scaled sums of counts.
__extension__ typedef __int128 WideCount;
__extension__ typedef unsigned __int128 WideUnsigned;

// Pebble requirement per vertex. Always non-negative.
class Demand {
 public:
  Demand() = default;
  // Throws NegativeCount.
  explicit Demand(std::vector<Count> counts);

  static Demand zero(std::size_t n) { return Demand(std::vector<Count>(n, 0)); }
  // U: one pebble everywhere.
  static Demand unit(std::size_t n) { return Demand(std::vector<Count>(n, 1)); }
  // R_v: one pebble on `target`, nothing elsewhere.
  static Demand reach(std::size_t n, Vertex target);

  std::size_t vertex_count() const { return counts_.size(); }
  Count operator[](Vertex v) const { return counts_[v]; }
  std::span<const Count> counts() const { return counts_; }
  Count total() const;
  bool is_zero() const;
  bool is_unit() const;
  // The vertex v when this demand equals R_v.
  std::optional<Vertex> reach_target() const;

  friend bool operator==(const Demand&, const Demand&) = default;

 private:
  std::vector<Count> counts_;
};

// Pebbles per vertex. Negative counts are allowed only when `extended`.
class Configuration {
 public:
  Configuration() = default;
  // Throws NegativeCount when !extended and some count is negative.
  explicit Configuration(std::vector<Count> counts, bool extended = false);

  static Configuration zero(std::size_t n) { return Configuration(std::vector<Count>(n, 0)); }

  std::size_t vertex_count() const { return counts_.size(); }
  Count operator[](Vertex v) const { return counts_[v]; }
  std::span<const Count> counts() const { return counts_; }
  bool extended() const { return extended_; }
  bool non_negative() const;

  // |C|, exact. Throws Overflow.
  Count size() const;

  // Pointwise C >= D.
  bool contains(const Demand& d) const;
  // Pointwise this >= other.
  bool dominates(const Configuration& other) const;

  // Entry-wise equality; the extended flag is not compared.
  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<Count> counts_;
  bool extended_ = false;
};

namespace detail {
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
}  // namespace detail

}  // namespace pebbling
