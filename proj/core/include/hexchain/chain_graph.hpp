#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "hexchain/code_word.hpp"
#include "hexchain/graph.hpp"

namespace hexchain {

enum class ChainKind : std::uint8_t { Spiro, Polyphenyl };

std::string_view to_string(ChainKind kind) noexcept;
// Accepts "spiro" and "polyphenyl" (case-insensitive); throws ParseError.
ChainKind parse_kind(std::string_view text);

// Explicit graph of a spiro or polyphenyl chain.
//
// Hexagon k occupies a block of consecutive vertex ids in cyclic ring order.
// Its entry vertex (the shared cut vertex c_k for spiro chains, the attach
// vertex c_k for polyphenyl chains) sits at ring position 0, and the exit
// toward hexagon k+1 sits at ring position 1, 2 or 3 for O, M or P. Hexagon 0
// has no entry; its exit is ring position 0.
class ChainGraph {
 public:
  ChainKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return graph_; }

  // Spiro: c_1..c_{n-1}, c_k shared by hexagons k-1 and k.
  const std::vector<VertexId>& cut_vertices() const noexcept {
    return cut_vertices_;
  }
  // Polyphenyl: the n-1 cut edges (t_k, c_k) with t_k in hexagon k-1.
  const std::vector<std::pair<VertexId, VertexId>>& attach_pairs()
      const noexcept {
    return attach_pairs_;
  }

  // The six vertices of hexagon k in ring order, starting at the entry.
  std::vector<VertexId> hexagon(int k) const;

 private:
  friend ChainGraph build_spiro(const CodeWord& code);
  friend ChainGraph build_polyphenyl(const CodeWord& code);

  ChainKind kind_ = ChainKind::Spiro;
  int n_ = 0;
  Graph graph_;
  std::vector<std::vector<VertexId>> hexagons_;
  std::vector<VertexId> cut_vertices_;
  std::vector<std::pair<VertexId, VertexId>> attach_pairs_;
};

// 5n + 1 vertices, 6n edges.
ChainGraph build_spiro(const CodeWord& code);
// 6n vertices, 7n - 1 edges.
ChainGraph build_polyphenyl(const CodeWord& code);
ChainGraph build_chain(ChainKind kind, const CodeWord& code);

// Contracts every cut edge of a polyphenyl chain. The result is isomorphic to
// build_spiro() on the same code word.
Graph squeeze_graph(const ChainGraph& polyphenyl);

}  // namespace hexchain
