#include "pebbling/move_list.hpp"

#include <algorithm>
#include <stdexcept>

#include "pebbling/error.hpp"

namespace pebbling {

void MoveList::add(Vertex from, Vertex to, Count count) {
  if (count < 0) throw std::invalid_argument("MoveList::add: negative count");
  if (count == 0) return;
  Count& slot = moves_[{from, to}];
  slot = detail::checked_add(slot, count);
}

void MoveList::remove(Vertex from, Vertex to, Count count) {
  if (count < 0) throw std::invalid_argument("MoveList::remove: negative count");
  if (count == 0) return;
  auto it = moves_.find({from, to});
  if (it == moves_.end() || it->second < count)
    throw std::invalid_argument("MoveList::remove: not enough moves");
  it->second -= count;
  if (it->second == 0) moves_.erase(it);
}

Count MoveList::get(Vertex from, Vertex to) const {
  auto it = moves_.find({from, to});
  return it == moves_.end() ? 0 : it->second;
}

Count MoveList::total_moves() const {
  Count total = 0;
  for (const auto& [key, count] : moves_) total = detail::checked_add(total, count);
  return total;
}

void MoveList::check_against(const Graph& g) const {
  for (const auto& [key, count] : moves_) {
    const auto [from, to] = key;
    if (from >= g.size() || to >= g.size())
      throw DimensionMismatch("move list references a vertex outside the graph");
    if (!g.has_edge(from, to))
      throw EdgeViolation("moves between non-adjacent vertices " + g.name(from) + " and " + g.name(to));
  }
}

std::vector<Vertex> MoveList::find_directed_cycle() const {
  Vertex top = 0;
  for (const auto& [key, count] : moves_) top = std::max({top, key.first + 1, key.second + 1});
  std::vector<std::vector<Vertex>> out(top);
  for (const auto& [key, count] : moves_) out[key.first].push_back(key.second);

  // 0 = unvisited, 1 = on the DFS stack, 2 = done.
  std::vector<int> state(top, 0);
  std::vector<Vertex> parent(top, 0);
  for (Vertex root = 0; root < top; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == out[u].size()) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      Vertex w = out[u][next++];
      if (state[w] == 1) {
        std::vector<Vertex> cycle{w};
        for (Vertex x = u; x != w; x = parent[x]) cycle.push_back(x);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = u;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

bool MoveList::has_directed_cycle() const { return !find_directed_cycle().empty(); }

bool MoveList::is_submultiset_of(const MoveList& other) const {
  return std::all_of(moves_.begin(), moves_.end(),
                     [&](const auto& entry) { return entry.second <= other.get(entry.first.first, entry.first.second); });
}

MoveList& MoveList::operator+=(const MoveList& other) {
  for (const auto& [key, count] : other.moves_) add(key.first, key.second, count);
  return *this;
}

MoveList MoveList::operator-(const MoveList& other) const {
  MoveList out = *this;
  for (const auto& [key, count] : other.moves_) out.remove(key.first, key.second, count);
  return out;
}

}  // namespace pebbling
