#include "pebbling/configuration.hpp"

#include <algorithm>

#include "pebbling/error.hpp"

namespace pebbling {

namespace detail {

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("pebble count overflow");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("pebble count overflow");
  return out;
}

}  // namespace detail

namespace {

Count checked_sum(std::span<const Count> counts) {
  Count total = 0;
  for (Count c : counts) total = detail::checked_add(total, c);
  return total;
}

}  // namespace

Demand::Demand(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](Count c) { return c < 0; }))
    throw NegativeCount("demand counts must be non-negative");
}

Demand Demand::reach(std::size_t n, Vertex target) {
  if (target >= n) throw DimensionMismatch("reach target out of range");
  std::vector<Count> counts(n, 0);
  counts[target] = 1;
  return Demand(std::move(counts));
}

Count Demand::total() const { return checked_sum(counts_); }

bool Demand::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c == 0; });
}

bool Demand::is_unit() const {
  return !counts_.empty() && std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c == 1; });
}

std::optional<Vertex> Demand::reach_target() const {
  std::optional<Vertex> target;
  for (Vertex v = 0; v < counts_.size(); ++v) {
    if (counts_[v] == 0) continue;
    if (counts_[v] != 1 || target) return std::nullopt;
    target = v;
  }
  return target;
}

Configuration::Configuration(std::vector<Count> counts, bool extended)
    : counts_(std::move(counts)), extended_(extended) {
  if (!extended_ && !non_negative())
    throw NegativeCount("negative pebble count in a non-extended configuration");
}

bool Configuration::non_negative() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c >= 0; });
}

Count Configuration::size() const { return checked_sum(counts_); }

bool Configuration::contains(const Demand& d) const {
  if (d.vertex_count() != counts_.size()) throw DimensionMismatch("configuration/demand size mismatch");
  for (Vertex v = 0; v < counts_.size(); ++v)
    if (counts_[v] < d[v]) return false;
  return true;
}

bool Configuration::dominates(const Configuration& other) const {
  if (other.counts_.size() != counts_.size()) throw DimensionMismatch("configuration size mismatch");
  for (Vertex v = 0; v < counts_.size(); ++v)
    if (counts_[v] < other.counts_[v]) return false;
  return true;
}

}  // namespace pebbling
