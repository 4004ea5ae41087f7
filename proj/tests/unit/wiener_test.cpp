#include "hexchain/wiener.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "hexchain/chain_graph.hpp"
#include "hexchain/errors.hpp"
#include "support/oracles.hpp"

namespace hexchain {
namespace {

using testing::wiener_floyd;

Graph cycle(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

// Fixture values below were produced by an all-pairs shortest path oracle
// (networkx and the Floyd-Warshall oracle in support/) on the graphs built by
// this library, and each test re-checks the oracle at runtime.

TEST(WienerBfsTest, HexagonIs27) {
  EXPECT_EQ(wiener_bfs(cycle(6)), 27);
  EXPECT_EQ(wiener_floyd(cycle(6)), 27);
}

TEST(WienerBfsTest, SingleVertexIsZero) {
  EXPECT_EQ(wiener_bfs(Graph(1)), 0);
  EXPECT_EQ(vertex_distance_sum(Graph(1), 0), 0);
}

TEST(WienerBfsTest, TwoSpiroHexagons) {
  const ChainGraph g = build_spiro(parse_code("", 2));
  EXPECT_EQ(wiener_bfs(g), 144);
  EXPECT_EQ(wiener_floyd(g.graph()), 144);
}

TEST(WienerBfsTest, DisconnectedGraphIsRejected) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_THROW(wiener_bfs(g), DisconnectedGraphError);
  EXPECT_THROW(vertex_distance_sum(g, 0), DisconnectedGraphError);
}

TEST(WienerBfsTest, AgreesWithFloydOnArbitraryGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    Graph g(n);
    // random spanning tree plus extra edges
    for (VertexId v = 1; v < n; ++v) g.add_edge(v, static_cast<VertexId>(rng() % v));
    for (int extra = 0; extra < static_cast<int>(rng() % 10); ++extra) {
      const auto a = static_cast<VertexId>(rng() % n);
      const auto b = static_cast<VertexId>(rng() % n);
      if (a != b) g.add_edge(a, b);
    }
    EXPECT_EQ(wiener_bfs(g), wiener_floyd(g));
  }
}

TEST(VertexDistanceSumTest, Examples) {
  const Graph hexagon = cycle(6);
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(vertex_distance_sum(hexagon, v), 9);

  const ChainGraph g = build_spiro(parse_code("", 2));
  EXPECT_EQ(vertex_distance_sum(g.graph(), g.cut_vertices()[0]), 18);
}

TEST(VertexDistanceSumTest, InvalidVertex) {
  EXPECT_THROW(vertex_distance_sum(cycle(6), 6), InvalidVertexError);
}

TEST(VertexDistanceSumTest, HandshakeWithWiener) {
  const ChainGraph g = build_polyphenyl(parse_code("PMMMO"));
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.graph().vertex_count(); ++v) {
    total += vertex_distance_sum(g.graph(), v);
  }
  EXPECT_EQ(total, 2 * wiener_bfs(g));
}

TEST(WeightTest, SpiroWeights) {
  EXPECT_EQ(f_weight(Letter::O, 2), 14);
  EXPECT_EQ(f_weight(Letter::M, 2), 19);
  EXPECT_EQ(f_weight(Letter::P, 2), 24);
  for (Letter x : kAllLetters) EXPECT_EQ(f_weight(x, 1), 9);
  EXPECT_EQ(f_weight(Letter::P, 5), 15 * 4 + 9);
}

TEST(WeightTest, PolyphenylWeights) {
  EXPECT_EQ(g_weight(Letter::O, 2), 21);
  EXPECT_EQ(g_weight(Letter::M, 2), 27);
  EXPECT_EQ(g_weight(Letter::P, 3), 57);
  for (Letter x : kAllLetters) EXPECT_EQ(g_weight(x, 1), 9);
  EXPECT_EQ(5 * g_weight(Letter::P, 3), 6 * f_weight(Letter::P, 3) + 30 * 3 - 39);
}

TEST(WeightTest, IndexBelowOneIsRejected) {
  EXPECT_THROW(f_weight(Letter::O, 0), DomainError);
  EXPECT_THROW(g_weight(Letter::M, -1), DomainError);
}

TEST(WeightTest, HugeIndexOverflows) {
  EXPECT_THROW(f_weight(Letter::P, std::numeric_limits<std::int64_t>::max() / 2),
               OverflowError);
}

TEST(SpiroFormulaTest, BaseCases) {
  EXPECT_EQ(wiener_spiro_recurrence(parse_code("", 1)), 27);
  EXPECT_EQ(wiener_spiro_closed(parse_code("", 1)), 27);
  EXPECT_EQ(wiener_spiro_recurrence(parse_code("", 2)), 144);
  EXPECT_EQ(wiener_spiro_closed(parse_code("", 2)), 144);
}

TEST(SpiroFormulaTest, FourHexagonChains) {
  EXPECT_EQ(wiener_spiro_closed(parse_code("OO")), 748);
  EXPECT_EQ(wiener_spiro_closed(parse_code("MM")), 848);
  EXPECT_EQ(wiener_spiro_closed(parse_code("OP")), 848);
  EXPECT_EQ(wiener_spiro_recurrence(parse_code("OO")), 748);
  EXPECT_EQ(wiener_floyd(build_spiro(parse_code("OO")).graph()), 748);
  EXPECT_EQ(wiener_floyd(build_spiro(parse_code("MM")).graph()), 848);
  EXPECT_EQ(wiener_floyd(build_spiro(parse_code("OP")).graph()), 848);
}

TEST(SpiroFormulaTest, FigureChainAllMethodsAgree) {
  const CodeWord code = parse_code("PMMMO");
  const std::int64_t oracle = wiener_floyd(build_spiro(code).graph());
  EXPECT_EQ(oracle, 3829);
  EXPECT_EQ(wiener_bfs(build_spiro(code)), oracle);
  EXPECT_EQ(wiener_spiro_recurrence(code), oracle);
  EXPECT_EQ(wiener_spiro_closed(code), oracle);
}

TEST(PolyphenylFormulaTest, BaseCases) {
  EXPECT_EQ(wiener_poly_recurrence(parse_code("", 1)), 27);
  EXPECT_EQ(wiener_poly_closed(parse_code("", 1)), 27);
  EXPECT_EQ(wiener_poly_recurrence(parse_code("", 2)), 198);
  EXPECT_EQ(wiener_poly_closed(parse_code("", 2)), 198);
  EXPECT_EQ(wiener_floyd(build_polyphenyl(parse_code("", 2)).graph()), 198);
}

TEST(PolyphenylFormulaTest, ThreeHexagonChains) {
  // Meta is 621; 585 belongs to the ortho chain.
  const struct {
    const char* code;
    std::int64_t w;
  } cases[] = {{"O", 585}, {"M", 621}, {"P", 657}};
  for (const auto& c : cases) {
    const CodeWord code = parse_code(c.code);
    EXPECT_EQ(wiener_floyd(build_polyphenyl(code).graph()), c.w) << c.code;
    EXPECT_EQ(wiener_poly_closed(code), c.w) << c.code;
    EXPECT_EQ(wiener_poly_recurrence(code), c.w) << c.code;
  }
}

TEST(PolyphenylFormulaTest, FigureChain) {
  const CodeWord code = parse_code("PMMMO");
  EXPECT_EQ(wiener_floyd(build_polyphenyl(code).graph()), 6993);
  EXPECT_EQ(wiener_poly_closed(code), 6993);
  EXPECT_EQ(wiener_poly_recurrence(code), 6993);
}

TEST(HomogeneousTest, SpotValues) {
  EXPECT_EQ(wiener_homogeneous(ChainKind::Spiro, Letter::O, 4), 748);
  EXPECT_EQ(wiener_homogeneous(ChainKind::Spiro, Letter::O, 3), 376);
  EXPECT_EQ(wiener_homogeneous(ChainKind::Spiro, Letter::M, 3), 401);
  EXPECT_EQ(wiener_homogeneous(ChainKind::Spiro, Letter::P, 3), 426);
  EXPECT_EQ(wiener_homogeneous(ChainKind::Polyphenyl, Letter::P, 2), 198);
  EXPECT_EQ(wiener_homogeneous(ChainKind::Polyphenyl, Letter::M, 3), 621);
  EXPECT_EQ(wiener_homogeneous(ChainKind::Polyphenyl, Letter::O, 3), 585);
  for (Letter x : kAllLetters) {
    EXPECT_EQ(wiener_homogeneous(ChainKind::Spiro, x, 1), 27);
    EXPECT_EQ(wiener_homogeneous(ChainKind::Polyphenyl, x, 1), 27);
    EXPECT_EQ(wiener_homogeneous(ChainKind::Spiro, x, 2), 144);
  }
}

TEST(HomogeneousTest, DomainAndOverflow) {
  EXPECT_THROW(wiener_homogeneous(ChainKind::Spiro, Letter::O, 0), DomainError);
  EXPECT_NO_THROW(wiener_homogeneous(ChainKind::Spiro, Letter::P, 100000));
  EXPECT_THROW(wiener_homogeneous(ChainKind::Spiro, Letter::P, 10000000),
               OverflowError);
}

TEST(SqueezeRelationTest, Examples) {
  EXPECT_EQ(squeeze_relation(2, 144), 198);
  EXPECT_EQ(squeeze_relation(1, 27), 27);
  EXPECT_EQ(squeeze_relation(3, 401), 621);
  EXPECT_EQ(squeeze_relation(3, 376), 585);
}

TEST(SqueezeRelationTest, NonSpiroValueIsIntegrityError) {
  EXPECT_THROW(squeeze_relation(2, 145), IntegrityError);
  EXPECT_THROW(squeeze_relation(0, 27), DomainError);
}

TEST(ComputeReportTest, AllMethodsOnConstantCode) {
  const WienerReport r = compute_report(ChainKind::Spiro, parse_code("MMM"));
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.w_bfs, 1535);
  EXPECT_EQ(r.w_recurrence, 1535);
  EXPECT_EQ(r.w_closed, 1535);
  EXPECT_EQ(r.w_polynomial, 1535);
  EXPECT_EQ(r.vertex_count, 26);
  EXPECT_EQ(r.edge_count, 30);
}

TEST(ComputeReportTest, StoresCanonicalCode) {
  const Method methods[] = {Method::Closed};
  const WienerReport r =
      compute_report(ChainKind::Polyphenyl, parse_code("PMMMO"), methods);
  EXPECT_EQ(r.code.to_string(), "OMMMP");
  EXPECT_FALSE(r.w_bfs.has_value());
  EXPECT_EQ(r.w_closed, 6993);
  EXPECT_EQ(r.vertex_count, 42);
  EXPECT_EQ(r.edge_count, 48);
}

TEST(ComputeReportTest, PolynomialNeedsConstantCode) {
  const Method methods[] = {Method::Polynomial};
  EXPECT_THROW(compute_report(ChainKind::Spiro, parse_code("OM"), methods),
               DomainError);
  EXPECT_EQ(compute_report(ChainKind::Spiro, parse_code("", 2), methods).w_polynomial,
            144);
}

TEST(MethodTest, ParseAndPrint) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("dijkstra"), ParseError);
}

}  // namespace
}  // namespace hexchain
