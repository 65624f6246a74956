#include "pebbling/x4c.hpp"

#include <algorithm>
#include <numeric>

#include "pebbling/error.hpp"

namespace pebbling {

X4CInstance::X4CInstance(std::size_t n, std::vector<Set> sets) : n_(n), sets_(std::move(sets)) {
  if (n_ == 0) throw MalformedInstance("X4C universe must be non-empty (n >= 1)");
  if (sets_.size() < n_)
    throw MalformedInstance("X4C needs at least n sets (m = " + std::to_string(sets_.size()) +
                            ", n = " + std::to_string(n_) + ")");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    Set& s = sets_[i];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw MalformedInstance("set " + std::to_string(i + 1) + " repeats an element");
    if (s.back() >= universe_size())
      throw MalformedInstance("set " + std::to_string(i + 1) + " has an element outside 1.." +
                              std::to_string(universe_size()));
  }
}

bool X4CInstance::contains(std::size_t set_index, std::size_t element) const {
  const Set& s = sets_.at(set_index);
  return std::binary_search(s.begin(), s.end(), element);
}

bool X4CInstance::is_exact_cover(const std::vector<std::size_t>& set_indices) const {
  if (set_indices.size() != n_) return false;
  std::vector<bool> covered(universe_size(), false);
  for (std::size_t i : set_indices) {
    if (i >= sets_.size()) return false;
    for (std::size_t e : sets_[i]) {
      if (covered[e]) return false;
      covered[e] = true;
    }
  }
  return true;
}

X4CInstance X4CInstance::random(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> universe(4 * n);
  std::iota(universe.begin(), universe.end(), 0);
  std::vector<Set> sets;
  for (std::size_t i = 0; i < m; ++i) {
    std::shuffle(universe.begin(), universe.end(), rng);
    sets.push_back({universe[0], universe[1], universe[2], universe[3]});
  }
  return X4CInstance(n, std::move(sets));
}

namespace {

bool cover_from(const X4CInstance& instance, std::vector<bool>& covered, std::vector<std::size_t>& chosen) {
  auto first_open = std::find(covered.begin(), covered.end(), false);
  if (first_open == covered.end()) return true;
  const std::size_t element = static_cast<std::size_t>(first_open - covered.begin());
  for (std::size_t i = 0; i < instance.m(); ++i) {
    const auto& s = instance.set(i);
    if (!instance.contains(i, element)) continue;
    if (std::any_of(s.begin(), s.end(), [&](std::size_t e) { return covered[e]; })) continue;
    for (std::size_t e : s) covered[e] = true;
    chosen.push_back(i);
    if (cover_from(instance, covered, chosen)) return true;
    chosen.pop_back();
    for (std::size_t e : s) covered[e] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> x4c_solve(const X4CInstance& instance) {
  std::vector<bool> covered(instance.universe_size(), false);
  std::vector<std::size_t> chosen;
  if (!cover_from(instance, covered, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace pebbling
