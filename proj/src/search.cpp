#include "search.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "pebbling/error.hpp"
#include "state_hash.hpp"

namespace pebbling::detail {

namespace {

// Shift bound that keeps scaled gamma numerators inside 128 bits.
constexpr std::size_t kMaxGammaShift = 56;

class DeficitSearch {
 public:
  DeficitSearch(const Graph& g, std::vector<Count> start, std::span<const Count> demand,
                const SolverOptions& options)
      : g_(g),
        n_(g.size()),
        x_(std::move(start)),
        d_(demand.begin(), demand.end()),
        options_(options),
        use_gamma_(options.gamma_pruning && g.diameter() <= kMaxGammaShift) {
    for (Vertex v = 0; v < n_; ++v) surplus_ += static_cast<WideCount>(x_[v]) - d_[v];
    if (use_gamma_) {
      const std::size_t diam = g_.diameter();
      weight_.resize(n_ * n_);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
          weight_[u * n_ + v] = static_cast<WideCount>(1) << (diam - g_.distance(u, v));
      gamma_.assign(n_, 0);
      for (Vertex v = 0; v < n_; ++v)
        for (Vertex u = 0; u < n_; ++u)
          gamma_[v] += (static_cast<WideCount>(x_[u]) - d_[u]) * weight_[u * n_ + v];
    }
  }

  SearchOutcome run() {
    SearchOutcome outcome;
    std::vector<Frame> stack;
    switch (auto frame = evaluate(0); frame.kind) {
      case Kind::Solved:
        outcome.solvable = true;
        [[fallthrough]];
      case Kind::Dead:
        outcome.moves = path_;
        outcome.stats = stats_;
        return outcome;
      case Kind::Expand:
        stack.push_back(std::move(frame));
        break;
    }

    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.suppliers.size()) {
        remember_failure();
        stack.pop_back();
        if (!stack.empty()) undo();
        continue;
      }
      const Vertex supplier = top.suppliers[top.next++];
      const Vertex target = top.target;
      apply(supplier, target);
      Frame child = evaluate(stack.size());
      if (child.kind == Kind::Solved) {
        outcome.solvable = true;
        break;
      }
      if (child.kind == Kind::Dead) {
        undo();
        continue;
      }
      stack.push_back(std::move(child));
    }
    outcome.moves = path_;
    outcome.stats = stats_;
    return outcome;
  }

 private:
  enum class Kind { Solved, Dead, Expand };
  struct Frame {
    Kind kind = Kind::Dead;
    Vertex target = 0;
    std::vector<Vertex> suppliers;
    std::size_t next = 0;
  };

  Frame evaluate(std::size_t depth) {
    if (++stats_.nodes_expanded > options_.node_cap)
      throw BudgetExceeded("search expanded more than " + std::to_string(options_.node_cap) + " nodes");
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, depth);

    Frame frame;
    std::optional<Vertex> short_vertex;
    WideCount deficit = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (x_[v] >= d_[v]) continue;
      if (!short_vertex) short_vertex = v;
      deficit += static_cast<WideCount>(d_[v]) - x_[v];
    }
    if (!short_vertex) {
      frame.kind = Kind::Solved;
      return frame;
    }
    // Each further move raises at most one short vertex by one and burns one
    // pebble of surplus.
    if (surplus_ < deficit) return frame;
    if (use_gamma_ && std::any_of(gamma_.begin(), gamma_.end(), [](WideCount g) { return g < 0; })) return frame;
    if (failed_.contains(x_)) return frame;

    frame.kind = Kind::Expand;
    frame.target = *short_vertex;
    auto nbrs = g_.neighbors(*short_vertex);
    frame.suppliers.assign(nbrs.begin(), nbrs.end());
    // Richest supplier first; ties by index.
    std::stable_sort(frame.suppliers.begin(), frame.suppliers.end(), [&](Vertex a, Vertex b) {
      return static_cast<WideCount>(x_[a]) - d_[a] > static_cast<WideCount>(x_[b]) - d_[b];
    });
    return frame;
  }

  void apply(Vertex from, Vertex to) {
    x_[from] = checked_add(x_[from], -2);
    x_[to] = checked_add(x_[to], 1);
    surplus_ -= 1;
    if (use_gamma_)
      for (Vertex v = 0; v < n_; ++v) gamma_[v] += weight_[to * n_ + v] - 2 * weight_[from * n_ + v];
    path_.emplace_back(from, to);
  }

  void undo() {
    const auto [from, to] = path_.back();
    path_.pop_back();
    x_[from] += 2;
    x_[to] -= 1;
    surplus_ += 1;
    if (use_gamma_)
      for (Vertex v = 0; v < n_; ++v) gamma_[v] -= weight_[to * n_ + v] - 2 * weight_[from * n_ + v];
  }

  void remember_failure() {
    if (failed_.size() < options_.memo_limit) failed_.insert(x_);
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Count> x_;
  std::vector<Count> d_;
  const SolverOptions& options_;
  bool use_gamma_;
  WideCount surplus_ = 0;
  std::vector<WideCount> weight_;
  std::vector<WideCount> gamma_;
  std::vector<Edge> path_;
  std::unordered_set<std::vector<Count>, CountsHash> failed_;
  SolveStats stats_;
};

}  // namespace

SearchOutcome search_deficits(const Graph& g, std::vector<Count> start, std::span<const Count> demand,
                              const SolverOptions& options) {
  if (start.size() != g.size() || demand.size() != g.size())
    throw DimensionMismatch("search: configuration/demand size mismatch");
  return DeficitSearch(g, std::move(start), demand, options).run();
}

}  // namespace pebbling::detail
