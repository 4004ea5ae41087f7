#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hexchain {

using VertexId = std::uint32_t;

// Simple undirected graph stored as adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  // Throws InvalidVertexError on out-of-range ids or self-loops. Adding an
  // existing edge is a no-op.
  void add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  // Each edge once, as (smaller id, larger id), in ascending order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  std::vector<std::size_t> sorted_degrees() const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Merges the endpoints of every listed edge and relabels the survivors
// consecutively, keeping the order of their smallest original id. Parallel
// edges created by the merge collapse into one.
Graph contract_edges(const Graph& graph,
                     std::span<const std::pair<VertexId, VertexId>> edges);

}  // namespace hexchain
