#include "hexchain/chain_graph.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hexchain/errors.hpp"

namespace hexchain {

std::string_view to_string(ChainKind kind) noexcept {
  return kind == ChainKind::Spiro ? "spiro" : "polyphenyl";
}

ChainKind parse_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "spiro") return ChainKind::Spiro;
  if (lower == "polyphenyl") return ChainKind::Polyphenyl;
  throw ParseError("unknown chain kind '" + std::string(text) +
                       "' (expected spiro or polyphenyl)",
                   0);
}

std::vector<VertexId> ChainGraph::hexagon(int k) const {
  if (k < 0 || k >= n_) {
    throw DomainError("hexagon index " + std::to_string(k) +
                      " out of range for a chain of length " +
                      std::to_string(n_));
  }
  return hexagons_[static_cast<std::size_t>(k)];
}

namespace {

void close_ring(Graph& graph, const std::vector<VertexId>& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    graph.add_edge(ring[i], ring[(i + 1) % ring.size()]);
  }
}

// Ring position of the exit from hexagon k (0-based) toward hexagon k+1.
std::size_t exit_position(const CodeWord& code, int k) {
  if (k == 0) return 0;
  // Exit of hexagon k is c_{k+1} (or t_{k+1}), classified by letter k+1.
  return static_cast<std::size_t>(ring_distance(code.letter_for(k + 1)));
}

}  // namespace

ChainGraph build_spiro(const CodeWord& code) {
  const int n = code.n();
  ChainGraph out;
  out.kind_ = ChainKind::Spiro;
  out.n_ = n;
  out.graph_ = Graph(static_cast<std::size_t>(5 * n + 1));
  out.hexagons_.reserve(static_cast<std::size_t>(n));
  out.cut_vertices_.reserve(static_cast<std::size_t>(n - 1));

  VertexId next = 0;
  std::vector<VertexId> ring(6);
  for (VertexId& v : ring) v = next++;
  for (int k = 0;; ++k) {
    close_ring(out.graph_, ring);
    out.hexagons_.push_back(ring);
    if (k + 1 == n) break;
    const VertexId cut = ring[exit_position(code, k)];
    out.cut_vertices_.push_back(cut);
    ring[0] = cut;
    for (std::size_t i = 1; i < 6; ++i) ring[i] = next++;
  }
  return out;
}

ChainGraph build_polyphenyl(const CodeWord& code) {
  const int n = code.n();
  ChainGraph out;
  out.kind_ = ChainKind::Polyphenyl;
  out.n_ = n;
  out.graph_ = Graph(static_cast<std::size_t>(6 * n));
  out.hexagons_.reserve(static_cast<std::size_t>(n));
  out.attach_pairs_.reserve(static_cast<std::size_t>(n - 1));

  VertexId next = 0;
  std::vector<VertexId> ring(6);
  for (int k = 0; k < n; ++k) {
    for (VertexId& v : ring) v = next++;
    close_ring(out.graph_, ring);
    if (k > 0) {
      const auto& previous = out.hexagons_.back();
      const VertexId tail = previous[exit_position(code, k - 1)];
      out.graph_.add_edge(tail, ring[0]);
      out.attach_pairs_.emplace_back(tail, ring[0]);
    }
    out.hexagons_.push_back(ring);
  }
  return out;
}

ChainGraph build_chain(ChainKind kind, const CodeWord& code) {
  return kind == ChainKind::Spiro ? build_spiro(code) : build_polyphenyl(code);
}

Graph squeeze_graph(const ChainGraph& polyphenyl) {
  if (polyphenyl.kind() != ChainKind::Polyphenyl) {
    throw DomainError("squeeze_graph expects a polyphenyl chain");
  }
  return contract_edges(polyphenyl.graph(), polyphenyl.attach_pairs());
}

}  // namespace hexchain
