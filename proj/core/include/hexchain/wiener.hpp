#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hexchain/chain_graph.hpp"
#include "hexchain/code_word.hpp"
#include "hexchain/graph.hpp"

namespace hexchain {

// Sum of d(u, v) over unordered vertex pairs, by one BFS per vertex.
// Works for any connected graph and serves as the reference for every other
// method. Throws DisconnectedGraphError.
std::int64_t wiener_bfs(const Graph& graph);
inline std::int64_t wiener_bfs(const ChainGraph& chain) {
  return wiener_bfs(chain.graph());
}

// Sum of distances from v to every other vertex.
std::int64_t vertex_distance_sum(const Graph& graph, VertexId v);

// Increment of W(G_k, c_k) when the spiro chain grows to k hexagons:
// 9 for k = 1, otherwise 5(k-1)+9 / 10(k-1)+9 / 15(k-1)+9 for O / M / P.
std::int64_t f_weight(Letter x, std::int64_t k);
// Polyphenyl analogue: 9 for k = 1, otherwise 12 / 18 / 24 (k-1) + 9.
std::int64_t g_weight(Letter x, std::int64_t k);

std::int64_t wiener_spiro_recurrence(const CodeWord& code);
std::int64_t wiener_spiro_closed(const CodeWord& code);
std::int64_t wiener_poly_recurrence(const CodeWord& code);
std::int64_t wiener_poly_closed(const CodeWord& code);

std::int64_t wiener_recurrence(ChainKind kind, const CodeWord& code);
std::int64_t wiener_closed(ChainKind kind, const CodeWord& code);

// Cubic polynomial for the all-O, all-M or all-P chain of length n.
std::int64_t wiener_homogeneous(ChainKind kind, Letter family, std::int64_t n);

// Wiener index of the polyphenyl chain whose hexagonal squeeze is a spiro
// chain of length n with Wiener index w_spiro:
//   (36 w_spiro + 150 n^3 - 270 n^2 - 177 n) / 25.
// Throws IntegrityError if the numerator is not a multiple of 25.
std::int64_t squeeze_relation(std::int64_t n, std::int64_t w_spiro);

enum class Method : std::uint8_t { Bfs, Recurrence, Closed, Polynomial };

std::string_view to_string(Method method) noexcept;
// Accepts bfs, recurrence, closed, polynomial; throws ParseError.
Method parse_method(std::string_view text);

inline constexpr Method kAllMethods[] = {Method::Bfs, Method::Recurrence,
                                         Method::Closed, Method::Polynomial};

struct WienerReport {
  CodeWord code;  // canonical
  ChainKind kind = ChainKind::Spiro;
  int n = 1;
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;
  std::optional<std::int64_t> w_bfs;
  std::optional<std::int64_t> w_recurrence;
  std::optional<std::int64_t> w_closed;
  std::optional<std::int64_t> w_polynomial;
  bool agree = true;

  std::optional<std::int64_t> value(Method method) const;
};

// Evaluates the requested methods on one chain. The polynomial method needs a
// constant code word and throws DomainError otherwise.
WienerReport compute_report(ChainKind kind, const CodeWord& code,
                            std::span<const Method> methods = kAllMethods);

}  // namespace hexchain
