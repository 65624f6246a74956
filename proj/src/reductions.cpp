#include "pebbling/reductions.hpp"

#include <array>
#include <utility>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 12> kRoleTags{{
    {Role::T, "T"},
    {Role::B, "B"},
    {Role::BPrime, "B'"},
    {Role::BDoublePrime, "B''"},
    {Role::BTriplePrime, "B'''"},
    {Role::V, "v"},
    {Role::PathInterior, "path"},
    {Role::W, "w"},
    {Role::U, "u_ij"},
    {Role::WChain, "w_i"},
    {Role::H, "H"},
    {Role::Trivial, "trivial"},
}};

// Incremental vertex/edge/count collector for the constructions below.
struct Builder {
  std::vector<std::string> names;
  std::vector<Role> roles;
  std::vector<Count> pebbles;
  std::vector<Edge> edges;

  Vertex add(std::string name, Role role, Count count) {
    names.push_back(std::move(name));
    roles.push_back(role);
    pebbles.push_back(count);
    return names.size() - 1;
  }
  void connect(Vertex a, Vertex b) { edges.emplace_back(a, b); }

  Graph graph() const { return Graph(names, edges); }
};

std::string indexed(std::string_view prefix, std::size_t i, std::string_view suffix = "") {
  return std::string(prefix) + std::to_string(i + 1) + std::string(suffix);
}

void require_cover(const X4CInstance& instance, const std::vector<std::size_t>& cover) {
  if (!instance.is_exact_cover(cover)) throw NotACover("the given sets are not an exact cover");
}

}  // namespace

std::string_view role_tag(Role role) {
  for (const auto& [r, tag] : kRoleTags)
    if (r == role) return tag;
  return "?";
}

std::optional<Role> role_from_tag(std::string_view tag) {
  for (const auto& [r, t] : kRoleTags)
    if (t == tag) return r;
  return std::nullopt;
}

ReducedInstance reduce_to_cover_solvability(const X4CInstance& instance) {
  const std::size_t n = instance.n(), m = instance.m();
  const std::size_t length = m - n;  // path v .. w
  if (length > 61) throw MalformedInstance("m - n too large for exact pebble counts");
  for (std::size_t e = 0; e < instance.universe_size(); ++e) {
    bool used = false;
    for (std::size_t i = 0; i < m && !used; ++i) used = instance.contains(i, e);
    if (!used) throw MalformedInstance("element " + std::to_string(e + 1) + " is in no set; the graph would be disconnected");
  }

  Builder b;
  for (std::size_t j = 0; j < 4 * n; ++j) b.add(indexed("t", j), Role::T, 0);
  const Vertex first_b = b.names.size();
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i), Role::B, 9);
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i, "'"), Role::BPrime, 1);
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i, "''"), Role::BDoublePrime, 1);
  const Count at_v = (Count{1} << length) - static_cast<Count>(length) + 1;
  const Vertex v = b.add("v", Role::V, at_v);

  for (std::size_t i = 0; i < m; ++i) {
    const Vertex bi = first_b + i, bp = first_b + m + i, bpp = first_b + 2 * m + i;
    for (std::size_t e : instance.set(i)) b.connect(bi, e);
    b.connect(bi, bp);
    b.connect(bp, bpp);
    b.connect(bpp, v);
  }
  // With m == n the path has no edges and w is v itself.
  Vertex previous = v;
  for (std::size_t k = 1; k < length; ++k) {
    const Vertex p = b.add(indexed("p", k - 1), Role::PathInterior, 1);
    b.connect(previous, p);
    previous = p;
  }
  if (length > 0) b.connect(previous, b.add("w", Role::W, 0));

  ReducedInstance out{b.graph(), Configuration(b.pebbles), Demand::unit(b.names.size()), std::nullopt,
                      std::nullopt, b.roles, false};
  return out;
}

MoveList cover_certificate_from_exact_cover(const X4CInstance& instance, const std::vector<std::size_t>& cover) {
  require_cover(instance, cover);
  const std::size_t n = instance.n(), m = instance.m(), length = m - n;
  const Vertex first_b = 4 * n, v = 4 * n + 3 * m;
  std::vector<bool> covering(m, false);
  for (std::size_t i : cover) covering[i] = true;

  MoveList moves;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex bi = first_b + i;
    if (covering[i]) {
      // Two pebbles per element vertex, one arriving.
      for (std::size_t e : instance.set(i)) moves.add(bi, e, 1);
    } else {
      // Eight pebbles down the chain, one arriving at v.
      moves.add(bi, first_b + m + i, 4);
      moves.add(first_b + m + i, first_b + 2 * m + i, 2);
      moves.add(first_b + 2 * m + i, v, 1);
    }
  }
  // v now holds 2^length + 1; push 2^(length-1-k) moves across the k-th path edge.
  Vertex from = v;
  for (std::size_t k = 0; k < length; ++k) {
    const Vertex to = v + 1 + k;
    moves.add(from, to, Count{1} << (length - 1 - k));
    from = to;
  }
  return moves;
}

ReducedInstance reduce_cover_to_canonical(const Graph& g, const Configuration& c) {
  if (c.vertex_count() != g.size()) throw DimensionMismatch("configuration does not match graph");
  if (!c.non_negative()) throw NegativeCount("cover-to-canonical needs a non-negative configuration");
  const std::size_t n = g.size();

  if (n < 62 && c.size() >= (Count{1} << n)) {
    // Already solvable for the unit demand: any trivially solvable instance will do.
    return ReducedInstance{Graph({"z"}, {}), Configuration({1}), Demand::reach(1, 0), Vertex{0}, std::nullopt,
                           {Role::Trivial}, true};
  }
  if (n == 1) {
    return ReducedInstance{g, c, Demand::reach(1, 0), Vertex{0}, std::nullopt, {Role::H}, false};
  }

  Builder b;
  for (Vertex i = 0; i < n; ++i) b.add(g.name(i) + "'", Role::H, detail::checked_add(c[i], 1));
  for (const auto& [x, y] : g.edges()) b.connect(x, y);
  std::vector<Vertex> path_end(n);
  for (Vertex i = 0; i < n; ++i) {
    Vertex previous = i;
    for (std::size_t j = 0; j < n; ++j) {
      const Vertex u = b.add("u" + std::to_string(i + 1) + "_" + std::to_string(j + 1), Role::U, 1);
      b.connect(previous, u);
      previous = u;
    }
    path_end[i] = previous;
  }
  Vertex w = b.add("w0", Role::WChain, (Count{1} << n) - static_cast<Count>(n));
  for (Vertex end : path_end) b.connect(end, w);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vertex next = b.add("w" + std::to_string(i), Role::WChain, 0);
    b.connect(w, next);
    w = next;
  }
  return ReducedInstance{b.graph(), Configuration(b.pebbles), Demand::reach(b.names.size(), w), w, std::nullopt,
                         b.roles, false};
}

ReducedInstance reduce_to_number_threshold(const X4CInstance& instance) {
  const std::size_t n = instance.n(), m = instance.m();
  Builder b;
  for (std::size_t j = 0; j < 4 * n; ++j) b.add(indexed("t", j), Role::T, 0);
  const Vertex first_b = b.names.size();
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i), Role::B, 0);
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i, "'"), Role::BPrime, 0);
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i, "''"), Role::BDoublePrime, 0);
  for (std::size_t i = 0; i < m; ++i) b.add(indexed("b", i, "'''"), Role::BTriplePrime, 0);
  const Vertex v = b.add("v", Role::V, 0);

  for (std::size_t j = 0; j < 4 * n; ++j) b.connect(j, v);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t e : instance.set(i)) b.connect(first_b + i, e);
    b.connect(first_b + i, first_b + m + i);
    b.connect(first_b + m + i, first_b + 2 * m + i);
    b.connect(first_b + 2 * m + i, first_b + 3 * m + i);
  }
  const Count threshold = 15 * static_cast<Count>(m) + 16 * static_cast<Count>(n);
  return ReducedInstance{b.graph(), Configuration(b.pebbles), Demand::reach(b.names.size(), v), v, threshold,
                         b.roles, false};
}

Configuration number_witness_config(const X4CInstance& instance, const std::vector<std::size_t>& cover) {
  require_cover(instance, cover);
  const std::size_t n = instance.n(), m = instance.m();
  std::vector<Count> counts(4 * n + 4 * m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) counts[4 * n + 3 * m + i] = 15;
  for (std::size_t i : cover) counts[4 * n + 3 * m + i] = 31;
  return Configuration(std::move(counts));
}

}  // namespace pebbling
