#include "hexchain/graph.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "hexchain/errors.hpp"

namespace hexchain {
namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

TEST(GraphTest, AddEdgeIsIdempotent) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(GraphTest, RejectsBadEdges) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(0, 0), InvalidVertexError);
  EXPECT_THROW(g.add_edge(0, 2), InvalidVertexError);
  EXPECT_THROW(g.neighbors(7), InvalidVertexError);
}

TEST(GraphTest, EdgesAreSortedPairs) {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  const std::vector<std::pair<VertexId, VertexId>> expected{{0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(ContractEdgesTest, PathShrinks) {
  const Graph g = path(5);
  const std::vector<std::pair<VertexId, VertexId>> merge{{1, 2}, {3, 4}};
  const Graph c = contract_edges(g, merge);
  EXPECT_EQ(c.vertex_count(), 3u);
  EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_TRUE(c.has_edge(0, 1));
  EXPECT_TRUE(c.has_edge(1, 2));
}

TEST(ContractEdgesTest, TriangleCollapsesParallelEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  const std::vector<std::pair<VertexId, VertexId>> merge{{0, 1}};
  const Graph c = contract_edges(g, merge);
  EXPECT_EQ(c.vertex_count(), 2u);
  EXPECT_EQ(c.edge_count(), 1u);
}

TEST(ContractEdgesTest, MissingEdgeIsRejected) {
  const std::vector<std::pair<VertexId, VertexId>> merge{{0, 3}};
  EXPECT_THROW(contract_edges(path(4), merge), InvalidVertexError);
}

}  // namespace
}  // namespace hexchain
