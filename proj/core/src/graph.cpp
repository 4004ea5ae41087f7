#include "hexchain/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hexchain/errors.hpp"

namespace hexchain {

void Graph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw InvalidVertexError("vertex " + std::to_string(v) +
                             " out of range for a graph with " +
                             std::to_string(adjacency_.size()) + " vertices");
  }
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw InvalidVertexError("self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) return;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adjacency_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Graph::sorted_degrees() const {
  std::vector<std::size_t> out;
  out.reserve(adjacency_.size());
  for (const auto& a : adjacency_) out.push_back(a.size());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }
  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root stays the smallest id
  }
  std::vector<VertexId> parent;
};

}  // namespace

Graph contract_edges(const Graph& graph,
                     std::span<const std::pair<VertexId, VertexId>> edges) {
  DisjointSets sets(graph.vertex_count());
  for (auto [u, v] : edges) {
    if (!graph.has_edge(u, v)) {
      throw InvalidVertexError("cannot contract missing edge (" +
                               std::to_string(u) + ", " + std::to_string(v) +
                               ")");
    }
    sets.unite(u, v);
  }

  std::vector<VertexId> label(graph.vertex_count());
  VertexId next = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (sets.find(v) == v) label[v] = next++;
  }
  Graph out(next);
  for (auto [u, v] : graph.edges()) {
    const VertexId a = label[sets.find(u)];
    const VertexId b = label[sets.find(v)];
    if (a != b) out.add_edge(a, b);
  }
  return out;
}

}  // namespace hexchain
