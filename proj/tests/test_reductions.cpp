#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pebbling/error.hpp"
#include "pebbling/numbers.hpp"
#include "pebbling/reductions.hpp"
#include "pebbling/solver.hpp"
#include "test_support.hpp"

using namespace pebbling;

namespace {

// Sets as printed, 1-based.
X4CInstance one_based(std::size_t n, std::vector<X4CInstance::Set> sets) {
  for (auto& s : sets)
    for (auto& e : s) --e;
  return X4CInstance(n, std::move(sets));
}

X4CInstance chain_of_three() { return one_based(2, {{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}}); }
X4CInstance no_cover() { return one_based(2, {{1, 2, 3, 4}, {3, 4, 5, 6}, {4, 5, 7, 8}}); }
X4CInstance single() { return one_based(1, {{1, 2, 3, 4}}); }

Count count_role(const ReducedInstance& r, Role role) { return std::ranges::count(r.roles, role); }

Count pebbles_on(const ReducedInstance& r, Role role) {
  Count total = 0;
  for (Vertex v = 0; v < r.graph.size(); ++v)
    if (r.roles[v] == role) total += r.config[v];
  return total;
}

}  // namespace

TEST(X4CTest, Validation) {
  EXPECT_THROW(X4CInstance(0, {}), MalformedInstance);
  EXPECT_THROW(X4CInstance(2, {{0, 1, 2, 3}}), MalformedInstance);
  EXPECT_THROW(X4CInstance(1, {{0, 1, 2, 4}}), MalformedInstance);
  EXPECT_THROW(X4CInstance(1, {{0, 1, 1, 2}}), MalformedInstance);
  X4CInstance sorted(1, {{3, 1, 0, 2}});
  EXPECT_EQ(sorted.set(0), (X4CInstance::Set{0, 1, 2, 3}));
}

TEST(X4CTest, SolveExamples) {
  EXPECT_EQ(x4c_solve(chain_of_three()), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(x4c_solve(single()), (std::vector<std::size_t>{0}));
  EXPECT_FALSE(x4c_solve(no_cover()));
}

TEST(X4CTest, SolveMatchesExhaustiveSubsets) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3, m = n + rng() % 5;
    X4CInstance inst = X4CInstance::random(n, m, rng);
    bool any = false;
    for (std::uint32_t mask = 0; mask < (1u << m) && !any; ++mask) {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) pick.push_back(i);
      any = inst.is_exact_cover(pick);
    }
    auto found = x4c_solve(inst);
    EXPECT_EQ(found.has_value(), any);
    if (found) EXPECT_TRUE(inst.is_exact_cover(*found));
  }
}

TEST(CoverReductionTest, ChainOfThreeShape) {
  ReducedInstance r = reduce_to_cover_solvability(chain_of_three());
  EXPECT_EQ(r.graph.size(), 19u);
  EXPECT_EQ(r.config[*r.graph.index_of("v")], 2);
  EXPECT_EQ(count_role(r, Role::T), 8);
  EXPECT_EQ(count_role(r, Role::B), 3);
  EXPECT_EQ(count_role(r, Role::W), 1);
  EXPECT_EQ(count_role(r, Role::PathInterior), 0);
  EXPECT_TRUE(r.demand.is_unit());
  EXPECT_EQ(pebbles_on(r, Role::B), 27);
  EXPECT_EQ(pebbles_on(r, Role::T), 0);
  EXPECT_EQ(pebbles_on(r, Role::W), 0);
}

TEST(CoverReductionTest, PebbleTotalFormula) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3, m = n + 1 + rng() % 6;
    X4CInstance inst = X4CInstance::random(n, m, rng);
    std::optional<ReducedInstance> reduced_or;
    try {
      reduced_or = reduce_to_cover_solvability(inst);
    } catch (const MalformedInstance&) {
      continue;  // some element in no set
    }
    const ReducedInstance& r = *reduced_or;
    const Count L = static_cast<Count>(m - n), M = static_cast<Count>(m);
    EXPECT_EQ(r.config.size(), 9 * M + 2 * M + (L - 1) + (Count{1} << L) - L + 1);
    EXPECT_EQ(r.graph.size(), 3 * n + 4 * m + 1);
    EXPECT_EQ(r.roles.size(), r.graph.size());
  }
}

TEST(CoverReductionTest, ChainOfThreeCertificate) {
  const X4CInstance inst = chain_of_three();
  ReducedInstance r = reduce_to_cover_solvability(inst);
  MoveList cert = cover_certificate_from_exact_cover(inst, {0, 2});
  EXPECT_TRUE(verify_solution(r.graph, r.config, r.demand, cert));
  EXPECT_THROW(cover_certificate_from_exact_cover(inst, {0, 1}), NotACover);
  EXPECT_TRUE(is_cover_solvable(r.graph, r.config, r.demand).solvable());
}

TEST(CoverReductionTest, SquareInstanceIdentifiesWWithV) {
  const X4CInstance inst = single();
  ReducedInstance r = reduce_to_cover_solvability(inst);
  EXPECT_EQ(r.graph.size(), 8u);
  EXPECT_EQ(count_role(r, Role::W), 0);
  EXPECT_EQ(r.config[*r.graph.index_of("v")], 2);
  MoveList cert = cover_certificate_from_exact_cover(inst, {0});
  EXPECT_TRUE(verify_solution(r.graph, r.config, r.demand, cert));
  const Vertex v = *r.graph.index_of("v");
  for (const auto& [edge, count] : cert.entries()) EXPECT_NE(edge.second, v);
  EXPECT_TRUE(oracle_solvable(r.graph, r.config, r.demand));
}

TEST(CoverReductionTest, RandomRoundTrips) {
  std::mt19937_64 rng(43);
  int reduced = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 2, m = n + rng() % 3;
    X4CInstance inst = X4CInstance::random(n, m, rng);
    std::optional<ReducedInstance> reduced_or;
    try {
      reduced_or = reduce_to_cover_solvability(inst);
    } catch (const MalformedInstance&) {
      continue;
    }
    const ReducedInstance& r = *reduced_or;
    ++reduced;
    auto cover = x4c_solve(inst);
    if (cover) EXPECT_TRUE(verify_solution(r.graph, r.config, r.demand, cover_certificate_from_exact_cover(inst, *cover)));
    EXPECT_EQ(is_cover_solvable(r.graph, r.config, r.demand).solvable(), cover.has_value()) << "trial " << trial;
  }
  EXPECT_GT(reduced, 10);
}

TEST(CanonicalReductionTest, PathOfFour) {
  ReducedInstance r = reduce_cover_to_canonical(Graph::path(4), Configuration({0, 2, 1, 3}));
  EXPECT_EQ(r.graph.size(), 25u);
  EXPECT_FALSE(r.trivial);
  std::vector<Count> h;
  for (Vertex v = 0; v < 4; ++v) h.push_back(r.config[v]);
  EXPECT_EQ(h, (std::vector<Count>{1, 3, 2, 4}));
  EXPECT_EQ(pebbles_on(r, Role::U), 16);
  EXPECT_EQ(count_role(r, Role::U), 16);
  EXPECT_EQ(r.config[*r.graph.index_of("w0")], 12);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(r.config[*r.graph.index_of("w" + std::to_string(i))], 0);
  EXPECT_EQ(r.target, r.graph.index_of("w4"));
  EXPECT_EQ(r.graph.name(0), "v1'");
}

TEST(CanonicalReductionTest, SpecialCases) {
  ReducedInstance trivial = reduce_cover_to_canonical(Graph::complete(2), Configuration({4, 0}));
  EXPECT_TRUE(trivial.trivial);
  EXPECT_EQ(trivial.graph.size(), 1u);
  EXPECT_EQ(trivial.config, Configuration({1}));

  const Graph one = Graph::path(1);
  for (Count k : {0, 1}) {
    ReducedInstance same = reduce_cover_to_canonical(one, Configuration({k}));
    EXPECT_FALSE(same.trivial);
    EXPECT_EQ(same.graph, one);
    EXPECT_EQ(same.config, Configuration({k}));
  }
  // Size 2 already reaches 2^1, so the trivial case wins.
  EXPECT_TRUE(reduce_cover_to_canonical(one, Configuration({2})).trivial);
}

TEST(CanonicalReductionTest, RoundTripOnSmallGraphs) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const Graph& g : fixtures::connected_graphs(n))
      for (Count k = 0; k <= 3; ++k)
        fixtures::for_each_config(n, k, [&](const std::vector<Count>& x) {
          const Configuration c(x);
          const bool cover = oracle_solvable(g, c, Demand::unit(n));
          ReducedInstance r = reduce_cover_to_canonical(g, c);
          ASSERT_EQ(is_canonical_solvable(r.graph, r.config).solvable, cover);
          ASSERT_EQ(is_reachable(r.graph, r.config, *r.target).solvable(), cover);
        });
}

TEST(NumberReductionTest, Shapes) {
  ReducedInstance chain = reduce_to_number_threshold(chain_of_three());
  EXPECT_EQ(chain.graph.size(), 21u);
  EXPECT_EQ(chain.threshold, 77);
  EXPECT_EQ(chain.config.size(), 0);
  EXPECT_EQ(chain.demand, Demand::reach(21, *chain.target));
  EXPECT_EQ(chain.graph.name(*chain.target), "v");

  ReducedInstance tiny = reduce_to_number_threshold(single());
  EXPECT_EQ(tiny.graph.size(), 9u);
  EXPECT_EQ(tiny.threshold, 31);
}

TEST(NumberReductionTest, RolesPartitionVertices) {
  for (const X4CInstance& inst : {chain_of_three(), no_cover(), single()}) {
    ReducedInstance r = reduce_to_number_threshold(inst);
    ASSERT_EQ(r.roles.size(), r.graph.size());
    EXPECT_EQ(count_role(r, Role::T), static_cast<Count>(4 * inst.n()));
    for (Role role : {Role::B, Role::BPrime, Role::BDoublePrime, Role::BTriplePrime})
      EXPECT_EQ(count_role(r, role), static_cast<Count>(inst.m()));
    EXPECT_EQ(count_role(r, Role::V), 1);
  }
}

TEST(NumberReductionTest, WitnessConfigs) {
  const X4CInstance inst = chain_of_three();
  ReducedInstance r = reduce_to_number_threshold(inst);
  Configuration w = number_witness_config(inst, {0, 2});
  EXPECT_EQ(w.size(), 77);
  std::vector<Count> triple;
  for (Vertex v = 0; v < r.graph.size(); ++v)
    if (r.roles[v] == Role::BTriplePrime) triple.push_back(w[v]);
  EXPECT_EQ(triple, (std::vector<Count>{31, 15, 31}));
  EXPECT_THROW(number_witness_config(inst, {1}), NotACover);

  Configuration one = number_witness_config(single(), {0});
  EXPECT_EQ(one.size(), 31);
  ReducedInstance tiny = reduce_to_number_threshold(single());
  EXPECT_FALSE(is_reachable(tiny.graph, one, *tiny.target).solvable());
  EXPECT_FALSE(oracle_solvable(tiny.graph, one, tiny.demand));
}

// A stack at the end of a 3-edge path, collapsed down to the far end.
TEST(NumberReductionTest, StackCollapseValues) {
  auto collapse_path = [](Count stack) {
    Graph g = Graph::path(4);
    Configuration c({0, 0, 0, stack});
    Demand d = Demand::zero(4);
    for (int step = 0; step < 3; ++step) {
      Collapsed next = collapse_leaf(g, c, d, g.size() - 1);
      g = next.graph;
      c = next.config;
      d = next.demand;
    }
    return c[0];
  };
  EXPECT_EQ(collapse_path(31), 3);
  EXPECT_EQ(collapse_path(15), 1);
  EXPECT_EQ(pebbling_number(Graph::path(4)).value, 8);
}

TEST(RoleTagTest, RoundTrip) {
  for (Role role : {Role::T, Role::B, Role::BPrime, Role::BDoublePrime, Role::BTriplePrime, Role::V,
                    Role::PathInterior, Role::W, Role::U, Role::WChain, Role::H, Role::Trivial})
    EXPECT_EQ(role_from_tag(role_tag(role)), role);
  EXPECT_FALSE(role_from_tag("nope"));
}
