#include <gtest/gtest.h>

#include "indpoly/engine.hpp"
#include "indpoly/error.hpp"
#include "indpoly/oracle.hpp"
#include "support.hpp"

namespace indpoly {
namespace {

using test::make;

const PolyFn bf = [](const Hypergraph& h) { return oracle::independence_poly_bf(h); };
const UniPoly x = UniPoly::monomial(1, 1);

EvalConfig config(EngineKind k, PivotStrategy p) {
  EvalConfig cfg;
  cfg.engine = k;
  cfg.pivot = p;
  return cfg;
}

TEST(Names, RoundTrip) {
  for (EngineKind k : all_engines) EXPECT_EQ(parse_engine(engine_name(k)), k);
  for (PivotStrategy p : all_pivots) EXPECT_EQ(parse_pivot(pivot_name(p)), p);
  EXPECT_FALSE(parse_engine("nope"));
  EXPECT_FALSE(parse_pivot(""));
}

TEST(Eval, Examples) {
  EXPECT_EQ(independence_polynomial(Hypergraph::edgeless(5)), UniPoly::one_plus_x_pow(5));
  const Hypergraph h = make({0, 1, 2}, {{0, 1, 2}});
  for (EngineKind k : all_engines) {
    EXPECT_EQ(independence_polynomial(h, config(k, PivotStrategy::MaxDegreeVertex)), (UniPoly{1, 3, 3}));
  }
  const Hypergraph p2 = make({0, 1}, {{0, 1}});
  const Hypergraph two = disjoint_union(p2, p2);
  EXPECT_EQ(independence_polynomial(two), (UniPoly{1, 4, 4}));
  EXPECT_EQ(oracle::independence_poly_bf(two), independence_polynomial(two));
}

TEST(Eval, EmptyEdgeIsZero) {
  const Hypergraph g = make({0, 1, 2}, {{0, 1}, {}, {2}}, Mode::Extended);
  for (EngineKind k : all_engines) {
    for (PivotStrategy p : all_pivots) EXPECT_TRUE(independence_polynomial(g, config(k, p)).is_zero());
  }
}

TEST(Eval, LoopContributesNothing) {
  const Hypergraph g = make({0, 1}, {{0}, {0, 1}});
  for (EngineKind k : all_engines) {
    for (PivotStrategy p : all_pivots) EXPECT_EQ(independence_polynomial(g, config(k, p)), (UniPoly{1, 1}));
  }
}

TEST(Eval, MemoAndSplitAreTransparent) {
  const Hypergraph g = test::path(30);
  EvalConfig on;
  const ComputationReport a = eval(g, on);
  EXPECT_GT(a.cache_hits, 0u);
  EvalConfig off;
  off.memoize = false;
  off.split_components = false;
  const ComputationReport b = eval(test::path(16), off);
  EXPECT_EQ(b.cache_hits, 0u);
  EXPECT_EQ(b.poly, eval(test::path(16), on).poly);
  // Fibonacci: σ(P_30) = F(32).
  EXPECT_EQ(evaluate(a.poly, 1), 2178309);
}

TEST(Eval, DepthBoundedByVerticesPlusEdges) {
  for (int seed = 0; seed < 40; ++seed) {
    const Hypergraph g = test::random_instance(seed, 10);
    for (EngineKind k : all_engines) {
      if (k == EngineKind::Oracle) continue;
      EvalConfig cfg = config(k, PivotStrategy::FirstEdge);
      cfg.memoize = false;
      cfg.split_components = false;
      const ComputationReport r = eval(g, cfg);
      EXPECT_LE(r.max_depth, g.num_vertices() + g.num_edges()) << to_string(g);
    }
  }
}

TEST(Eval, RecursionLimit) {
  EvalConfig cfg;
  cfg.recursion_limit = 3;
  try {
    eval(test::path(20), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RecursionLimitExceeded);
  }
}

TEST(Eval, OracleEngineRespectsLimits) {
  EvalConfig cfg = config(EngineKind::Oracle, PivotStrategy::MaxDegreeVertex);
  cfg.oracle_limits.max_vertices = 4;
  EXPECT_THROW(eval(Hypergraph::edgeless(5), cfg), Error);
}

TEST(Steps, Vertex) {
  const Combination loop = step_vertex(make({0}, {{0}}), 0);
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(combine(loop, bf), UniPoly{1});

  const Hypergraph p2 = make({0, 1}, {{0, 1}});
  const Combination c = step_vertex(p2, 0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1].coefficient, x);
  EXPECT_EQ(c[1].child, make({1}, {{1}}));
  EXPECT_EQ(combine(c, bf), (UniPoly{1, 2}));

  const Hypergraph h = make({0, 1, 2}, {{0, 1, 2}});
  const Combination d = step_vertex(h, 0);
  EXPECT_EQ(d[0].child, make({1, 2}, {}));
  EXPECT_EQ(d[1].child, make({1, 2}, {{1, 2}}));
  EXPECT_EQ(combine(d, bf), (UniPoly{1, 3, 3}));

  EXPECT_THROW(step_vertex(h, 9), Error);
}

TEST(Steps, VertexExtendedHasNoCases) {
  const Hypergraph g = make({0, 1}, {{0}, {0, 1}}, Mode::Extended);
  const Combination c = step_vertex(g, 0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(c[1].child.has_empty_edge());
  EXPECT_EQ(combine(c, bf), oracle::independence_poly_bf(g));
}

TEST(Steps, Edge) {
  const Hypergraph p2 = make({0, 1}, {{0, 1}});
  const Combination c = step_edge(p2, EdgeRef{0});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].child, Hypergraph::edgeless(2));
  EXPECT_EQ(c[1].coefficient, -(x * x));
  EXPECT_EQ(c[1].child.num_vertices(), 0u);
  EXPECT_EQ(combine(c, bf), (UniPoly{1, 2}));

  const Hypergraph sub = make({0, 1, 2}, {{0, 1, 2}, {0, 1}});
  const Combination s = step_edge(sub, EdgeRef{0});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].child, make({0, 1, 2}, {{0, 1}}));
  EXPECT_EQ(combine(s, bf), oracle::independence_poly_bf(sub));

  EXPECT_EQ(combine(step_edge(make({0, 1, 2}, {{0, 1, 2}}), EdgeRef{0}), bf), (UniPoly{1, 3, 3}));

  try {
    step_edge(make({0}, {{0}}), EdgeRef{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LoopNotSupported);
  }
  EXPECT_THROW(step_edge(p2, EdgeRef{3}), Error);
}

TEST(Steps, EdgeDuplicateCountsAsSubedge) {
  const Hypergraph g = make({0, 1}, {{0, 1}, {0, 1}});
  ASSERT_EQ(step_edge(g, EdgeRef{0}).size(), 1u);
  EXPECT_EQ(combine(step_edge(g, EdgeRef{0}), bf), (UniPoly{1, 2}));
}

TEST(Steps, EdgeExtendedHasNoCases) {
  const Hypergraph g = make({0, 1}, {{0}, {0, 1}}, Mode::Extended);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(step_edge(g, EdgeRef{i}).size(), 2u);
    EXPECT_EQ(combine(step_edge(g, EdgeRef{i}), bf), oracle::independence_poly_bf(g));
  }
}

TEST(Steps, EdgeInclusionExclusion) {
  EXPECT_EQ(combine(step_edge_ie(make({0, 1}, {{0, 1}}), EdgeRef{0}), bf), (UniPoly{1, 2}));
  const Combination c = step_edge_ie(make({0, 1, 2}, {{0, 1, 2}}), EdgeRef{0});
  EXPECT_EQ(c.size(), 7u);
  EXPECT_EQ(combine(c, bf), (UniPoly{1, 3, 3}));
  const Combination loop = step_edge_ie(make({0}, {{0}}), EdgeRef{0});
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(combine(loop, bf), UniPoly{1});
}

TEST(Steps, EdgeContraction) {
  EXPECT_EQ(combine(step_edge_contract(make({0, 1}, {{0, 1}}), EdgeRef{0}), bf), (UniPoly{1, 2}));
  EXPECT_EQ(combine(step_edge_contract(make({0, 1, 2}, {{0, 1, 2}}), EdgeRef{0}), bf), (UniPoly{1, 3, 3}));
  EXPECT_EQ(combine(step_edge_contract(make({0}, {{0}}), EdgeRef{0}), bf), UniPoly{1});
  EXPECT_EQ(combine(step_edge_contract(make({0, 1, 2}, {{0, 1}, {1, 2}}), EdgeRef{0}), bf), (UniPoly{1, 3, 1}));
}

TEST(Steps, VertexSubset) {
  const Hypergraph p2 = make({0, 1}, {{0, 1}});
  const Combination c = expand_vertex_subset(p2, VertexSet{0, 1});
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(combine(c, bf), (UniPoly{1, 2}));
  EXPECT_EQ(combine(expand_vertex_subset(Hypergraph::edgeless(2), VertexSet{0, 1}), bf), UniPoly::one_plus_x_pow(2));

  const Hypergraph h = make({0, 1, 2}, {{0, 1}, {1, 2}});
  const Combination one = expand_vertex_subset(h, VertexSet{1});
  const Combination step = step_vertex(h, 1);
  ASSERT_EQ(one.size(), step.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].coefficient, step[i].coefficient);
    EXPECT_EQ(one[i].child, step[i].child);
  }
  EXPECT_THROW(expand_vertex_subset(h, VertexSet{5}), Error);
}

TEST(Steps, VertexSubsetInclusionExclusion) {
  const Hypergraph p2 = make({0, 1}, {{0, 1}});
  EXPECT_EQ(combine(expand_vertex_subset_ie(p2, VertexSet{0, 1}), bf), (UniPoly{1, 2}));
  const Hypergraph h = make({0, 1, 2}, {{0, 1, 2}});
  const Combination c = expand_vertex_subset_ie(h, VertexSet{0, 1});
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(combine(c, bf), (UniPoly{1, 3, 3}));
  EXPECT_EQ(combine(expand_vertex_subset_ie(h, VertexSet{0}), bf), combine(step_vertex(h, 0), bf));
}

TEST(Pivot, Choices) {
  EXPECT_EQ(std::get<VertexId>(choose_pivot(make({0, 1, 2}, {{0, 1}, {0, 2}}), PivotStrategy::MaxDegreeVertex)), 0u);
  EXPECT_EQ(std::get<VertexId>(choose_pivot(make({0, 1, 2}, {{1, 2}, {0, 2}}), PivotStrategy::MaxDegreeVertex)), 2u);
  const Hypergraph g = make({0, 1, 2}, {{0, 1, 2}, {1, 2}});
  const EdgeRef e = std::get<EdgeRef>(choose_pivot(g, PivotStrategy::SmallestEdge));
  EXPECT_EQ(g.edge(e), (Edge{1, 2}));
  EXPECT_EQ(std::get<EdgeRef>(choose_pivot(g, PivotStrategy::FirstEdge)).index, 0u);
  // Ties: lexicographic, then occurrence index.
  const Hypergraph t = make({0, 1, 2}, {{1, 2}, {0, 2}, {0, 2}});
  EXPECT_EQ(std::get<EdgeRef>(choose_pivot(t, PivotStrategy::SmallestEdge)).index, 1u);
  for (PivotStrategy s : {PivotStrategy::SmallestEdge, PivotStrategy::FirstEdge}) {
    try {
      choose_pivot(Hypergraph::edgeless(3), s);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), Errc::NoPivotAvailable);
    }
  }
  EXPECT_THROW(choose_pivot(Hypergraph::edgeless(0), PivotStrategy::MinVertexId), Error);
}

class EngineRandom : public ::testing::TestWithParam<int> {};

TEST_P(EngineRandom, AllEnginesAgreeWithOracle) {
  for (Mode mode : {Mode::Strict, Mode::Extended}) {
    const Hypergraph g = test::random_instance(GetParam(), 9, mode);
    const UniPoly expect = oracle::independence_poly_bf(g);
    for (EngineKind k : all_engines) {
      for (PivotStrategy p : all_pivots) {
        EvalConfig cfg = config(k, p);
        EXPECT_EQ(eval(g, cfg).poly, expect) << engine_name(k) << "/" << pivot_name(p) << " " << to_string(g);
        cfg.memoize = false;
        cfg.split_components = false;
        EXPECT_EQ(eval(g, cfg).poly, expect);
      }
    }
  }
}

TEST_P(EngineRandom, Multiplicative) {
  const Hypergraph a = test::random_instance(GetParam(), 6);
  const Hypergraph b = test::random_instance(GetParam() + 500, 6);
  EXPECT_EQ(independence_polynomial(disjoint_union(a, b)), independence_polynomial(a) * independence_polynomial(b));
}

TEST_P(EngineRandom, SingleStepsMatchOracle) {
  const Hypergraph g = test::random_instance(GetParam(), 7, Mode::Extended);
  const UniPoly expect = oracle::independence_poly_bf(g);
  for (VertexId v : g.vertices()) EXPECT_EQ(combine(step_vertex(g, v), bf), expect);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(combine(step_edge(g, EdgeRef{i}), bf), expect);
    EXPECT_EQ(combine(step_edge_ie(g, EdgeRef{i}), bf), expect);
    if (!g.edges()[i].empty()) EXPECT_EQ(combine(step_edge_contract(g, EdgeRef{i}), bf), expect);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EngineRandom, ::testing::Range(0, 80));

// On simple graphs the hypergraph forms reduce to the usual graph recurrences.
class SimpleGraph : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SimpleGraph, Specializations) {
  for (const Hypergraph& g : test::all_simple_graphs(GetParam())) {
    const UniPoly expect = oracle::independence_poly_bf(g);
    for (VertexId v : g.vertices()) {
      const UniPoly standard = bf(delete_vertices(g, VertexSet{v})) +
                               x * bf(delete_vertices(g, closed_neighborhood(g, VertexSet{v})));
      EXPECT_EQ(standard, expect);
    }
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges()[i];
      const UniPoly rule = bf(delete_edge(g, EdgeRef{i})) - x * x * bf(delete_vertices(g, closed_neighborhood(g, e)));
      EXPECT_EQ(rule, combine(step_edge(g, EdgeRef{i}), bf));
      EXPECT_EQ(rule, expect);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, SimpleGraph, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace indpoly
