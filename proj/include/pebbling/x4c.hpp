#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace pebbling {

// Exact cover by 4-sets: a universe of 4n elements and m >= n four-element
// subsets. Elements and sets are 0-based here; files use 1-based elements.
class X4CInstance {
 public:
  using Set = std::array<std::size_t, 4>;

  // Throws MalformedInstance when n == 0, m < n, or a set is not 4 distinct
  // elements of the universe. Each set is stored sorted.
  X4CInstance(std::size_t n, std::vector<Set> sets);

  std::size_t n() const { return n_; }
  std::size_t m() const { return sets_.size(); }
  std::size_t universe_size() const { return 4 * n_; }
  const std::vector<Set>& sets() const { return sets_; }
  const Set& set(std::size_t i) const { return sets_[i]; }
  bool contains(std::size_t set_index, std::size_t element) const;

  // n pairwise-disjoint sets whose union is the universe.
  bool is_exact_cover(const std::vector<std::size_t>& set_indices) const;

  // Uniformly random 4-subsets; no guarantee about covers.
  static X4CInstance random(std::size_t n, std::size_t m, std::mt19937_64& rng);

  friend bool operator==(const X4CInstance&, const X4CInstance&) = default;

 private:
  std::size_t n_;
  std::vector<Set> sets_;
};

// Backtracking on the lowest uncovered element, trying the lowest-index
// available set first. Returns ascending set indices, or nullopt.
std::optional<std::vector<std::size_t>> x4c_solve(const X4CInstance& instance);

}  // namespace pebbling
