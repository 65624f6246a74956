#include "pebbling/core.hpp"

#include <algorithm>
#include <cmath>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

void check_dimensions(const Graph& g, std::size_t config_size, std::size_t demand_size) {
  if (config_size != g.size() || demand_size != g.size())
    throw DimensionMismatch("configuration, demand, and graph index different vertex sets");
}

// Largest shift for which a count up to 2^63 still fits the 128-bit numerator
// after summing over the graph.
constexpr std::size_t kMaxShift = 56;

}  // namespace

std::string wide_to_string(WideCount value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  WideUnsigned magnitude = negative ? -static_cast<WideUnsigned>(value) : value;
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double PotentialValue::approx() const {
  return std::ldexp(static_cast<long double>(numerator), -static_cast<int>(log2_denominator));
}

std::string PotentialValue::to_string() const {
  std::string out = wide_to_string(numerator);
  if (log2_denominator > 0) out += "/2^" + std::to_string(log2_denominator);
  return out;
}

std::strong_ordering operator<=>(const PotentialValue& a, const PotentialValue& b) {
  // Bring both to the larger denominator; shifts are bounded by kMaxShift so
  // neither side overflows.
  const unsigned k = std::max(a.log2_denominator, b.log2_denominator);
  const WideCount lhs = a.numerator * (static_cast<WideCount>(1) << (k - a.log2_denominator));
  const WideCount rhs = b.numerator * (static_cast<WideCount>(1) << (k - b.log2_denominator));
  return lhs <=> rhs;
}

Configuration apply_moves(const Graph& g, const Configuration& c, const MoveList& moves) {
  if (c.vertex_count() != g.size()) throw DimensionMismatch("configuration does not match graph");
  moves.check_against(g);
  std::vector<Count> out(c.counts().begin(), c.counts().end());
  for (const auto& [key, count] : moves.entries()) {
    out[key.first] = detail::checked_add(out[key.first], detail::checked_mul(-2, count));
    out[key.second] = detail::checked_add(out[key.second], count);
  }
  return Configuration(std::move(out), /*extended=*/true);
}

std::optional<Vertex> first_violation(const Graph& g, const Configuration& c, const Demand& d,
                                      const MoveList& moves) {
  check_dimensions(g, c.vertex_count(), d.vertex_count());
  const Configuration after = apply_moves(g, c, moves);
  for (Vertex k = 0; k < g.size(); ++k)
    if (after[k] < d[k]) return k;
  return std::nullopt;
}

bool verify_solution(const Graph& g, const Configuration& c, const Demand& d, const MoveList& moves) {
  return !first_violation(g, c, d, moves).has_value();
}

std::vector<Edge> legal_moves(const Graph& g, const Configuration& c) {
  if (c.vertex_count() != g.size()) throw DimensionMismatch("configuration does not match graph");
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (c[u] < 2) continue;
    for (Vertex w : g.neighbors(u)) out.emplace_back(u, w);
  }
  return out;
}

PotentialValue gamma(const Graph& g, const Configuration& c, const Demand& d, Vertex v) {
  check_dimensions(g, c.vertex_count(), d.vertex_count());
  if (v >= g.size()) throw DimensionMismatch("gamma: vertex out of range");
  const std::size_t ecc = g.eccentricity(v);
  if (ecc > kMaxShift) throw Overflow("gamma: eccentricity too large for exact arithmetic");
  PotentialValue value;
  value.log2_denominator = static_cast<unsigned>(ecc);
  for (Vertex u = 0; u < g.size(); ++u) {
    const WideCount surplus = static_cast<WideCount>(c[u]) - d[u];
    value.numerator += surplus * (static_cast<WideCount>(1) << (ecc - g.distance(u, v)));
  }
  return value;
}

std::optional<Vertex> gamma_witness(const Graph& g, const Configuration& c, const Demand& d) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (gamma(g, c, d, v).negative()) return v;
  return std::nullopt;
}

}  // namespace pebbling
