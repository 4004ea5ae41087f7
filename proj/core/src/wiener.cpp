#include "hexchain/wiener.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "hexchain/checked_math.hpp"
#include "hexchain/errors.hpp"

namespace hexchain {

namespace {

// Flat adjacency snapshot so the all-sources loop avoids per-call checks.
struct CompactAdjacency {
  explicit CompactAdjacency(const Graph& graph) : offsets(graph.vertex_count() + 1) {
    targets.reserve(2 * graph.edge_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      offsets[v] = static_cast<std::uint32_t>(targets.size());
      for (VertexId w : graph.neighbors(v)) targets.push_back(w);
    }
    offsets.back() = static_cast<std::uint32_t>(targets.size());
  }
  std::vector<std::uint32_t> offsets;
  std::vector<VertexId> targets;
};

// Fills dist with BFS distances from source and returns their sum and the
// number of vertices reached. queue must have room for every vertex.
std::pair<std::int64_t, std::size_t> bfs_from(const CompactAdjacency& adj,
                                              VertexId source,
                                              std::vector<std::int32_t>& dist,
                                              std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[source] = 0;
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = source;
  std::int64_t total = 0;
  const VertexId* targets = adj.targets.data();
  while (head < tail) {
    const VertexId u = queue[head++];
    const std::int32_t next = dist[u] + 1;
    for (std::uint32_t i = adj.offsets[u]; i < adj.offsets[u + 1]; ++i) {
      const VertexId v = targets[i];
      if (dist[v] < 0) {
        dist[v] = next;
        total += next;
        queue[tail++] = v;
      }
    }
  }
  return {total, tail};
}

std::int64_t require_positive_index(std::int64_t k, const char* what) {
  if (k < 1) {
    throw DomainError(std::string(what) + " index must be at least 1, got " +
                      std::to_string(k));
  }
  return k;
}

void require_length(std::int64_t n) {
  if (n < 1) {
    throw DomainError("chain length must be at least 1, got " +
                      std::to_string(n));
  }
}

}  // namespace

std::int64_t wiener_bfs(const Graph& graph) {
  const std::size_t count = graph.vertex_count();
  std::vector<std::int32_t> dist(count);
  std::vector<VertexId> queue(count);
  const CompactAdjacency adj(graph);
  std::int64_t twice = 0;
  for (VertexId v = 0; v < count; ++v) {
    auto [sum, reached] = bfs_from(adj, v, dist, queue);
    if (reached != count) {
      throw DisconnectedGraphError("graph is disconnected: vertex " +
                                   std::to_string(v) + " reaches " +
                                   std::to_string(reached) + " of " +
                                   std::to_string(count) + " vertices");
    }
    twice = checked::add(twice, sum);
  }
  return twice / 2;
}

std::int64_t vertex_distance_sum(const Graph& graph, VertexId v) {
  if (v >= graph.vertex_count()) {
    throw InvalidVertexError("vertex " + std::to_string(v) +
                             " out of range for a graph with " +
                             std::to_string(graph.vertex_count()) +
                             " vertices");
  }
  std::vector<std::int32_t> dist(graph.vertex_count());
  std::vector<VertexId> queue(graph.vertex_count());
  auto [sum, reached] = bfs_from(CompactAdjacency(graph), v, dist, queue);
  if (reached != graph.vertex_count()) {
    throw DisconnectedGraphError("graph is disconnected");
  }
  return sum;
}

std::int64_t f_weight(Letter x, std::int64_t k) {
  require_positive_index(k, "f_weight");
  if (k == 1) return 9;
  return checked::add(checked::mul(5 * ring_distance(x), k - 1), 9);
}

std::int64_t g_weight(Letter x, std::int64_t k) {
  require_positive_index(k, "g_weight");
  if (k == 1) return 9;
  // 12, 18, 24 = 6 * (ring distance + 1)
  return checked::add(checked::mul(6 * (ring_distance(x) + 1), k - 1), 9);
}

namespace {

struct RecurrenceRule {
  std::int64_t (*weight)(Letter, std::int64_t);
  std::int64_t vertex_factor;  // vertices added per hexagon besides the link
  std::int64_t linear;         // W_k = W_{k-1} + f*W(.,c) + linear*k + offset
  std::int64_t offset;
};

constexpr RecurrenceRule kSpiroRule{f_weight, 5, 45, -18};
constexpr RecurrenceRule kPolyRule{g_weight, 6, 90, -63};

// Runs W(G_k) and W(G_k, c_k) forward from the single hexagon, where both
// chain kinds start at W = 27 and W(G_1, c_1) = 9.
std::int64_t run_recurrence(const RecurrenceRule& rule, const CodeWord& code) {
  const std::int64_t n = code.n();
  std::int64_t wiener = 27;
  std::int64_t link_sum = 9;
  for (std::int64_t k = 2; k <= n; ++k) {
    wiener = checked::add(
        wiener, checked::add(checked::mul(rule.vertex_factor, link_sum),
                             checked::add(checked::mul(rule.linear, k),
                                          rule.offset)));
    if (k <= n - 1) {
      link_sum = checked::add(
          link_sum, rule.weight(code.letter_for(static_cast<int>(k)), k));
    }
  }
  return wiener;
}

// sum_{k=1}^{n-1} (n - k) * weight(c_k)
std::int64_t weighted_link_sum(std::int64_t (*weight)(Letter, std::int64_t),
                               const CodeWord& code) {
  const std::int64_t n = code.n();
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    const std::int64_t w =
        k == 1 ? 9 : weight(code.letter_for(static_cast<int>(k)), k);
    total = checked::add(total, checked::mul(n - k, w));
  }
  return total;
}

}  // namespace

std::int64_t wiener_spiro_recurrence(const CodeWord& code) {
  return run_recurrence(kSpiroRule, code);
}

std::int64_t wiener_poly_recurrence(const CodeWord& code) {
  return run_recurrence(kPolyRule, code);
}

std::int64_t wiener_spiro_closed(const CodeWord& code) {
  const std::int64_t n = code.n();
  // 45n^2 + 9n = 9n(5n + 1) is even since n and 5n + 1 have opposite parity.
  const std::int64_t quadratic = checked::exact_div(
      checked::mul(9, n, checked::add(checked::mul(5, n), 1)), 2,
      "spiro quadratic term");
  return checked::add(checked::mul(5, weighted_link_sum(f_weight, code)),
                      quadratic);
}

std::int64_t wiener_poly_closed(const CodeWord& code) {
  const std::int64_t n = code.n();
  const std::int64_t quadratic =
      checked::sub(checked::mul(45, n, n), checked::mul(18, n));
  return checked::add(checked::mul(6, weighted_link_sum(g_weight, code)),
                      quadratic);
}

std::int64_t wiener_recurrence(ChainKind kind, const CodeWord& code) {
  return kind == ChainKind::Spiro ? wiener_spiro_recurrence(code)
                                  : wiener_poly_recurrence(code);
}

std::int64_t wiener_closed(ChainKind kind, const CodeWord& code) {
  return kind == ChainKind::Spiro ? wiener_spiro_closed(code)
                                  : wiener_poly_closed(code);
}

std::int64_t wiener_homogeneous(ChainKind kind, Letter family, std::int64_t n) {
  require_length(n);
  using checked::add;
  using checked::exact_div;
  using checked::mul;
  using checked::sub;
  const std::int64_t n2 = mul(n, n);
  const std::int64_t n3 = mul(n2, n);
  if (kind == ChainKind::Spiro) {
    switch (family) {
      case Letter::O:  // (25n^3 + 195n^2 - 58n) / 6
        return exact_div(sub(add(mul(25, n3), mul(195, n2)), mul(58, n)), 6,
                         "W(O_n)");
      case Letter::M:  // (25n^3 + 60n^2 - 4n) / 3
        return exact_div(sub(add(mul(25, n3), mul(60, n2)), mul(4, n)), 3,
                         "W(M_n)");
      case Letter::P:  // (25n^3 + 15n^2 + 14n) / 2
        return exact_div(add(add(mul(25, n3), mul(15, n2)), mul(14, n)), 2,
                         "W(P_n)");
    }
  } else {
    switch (family) {
      case Letter::O:
        return sub(add(mul(12, n3), mul(36, n2)), mul(21, n));
      case Letter::M:
        return sub(add(mul(18, n3), mul(18, n2)), mul(9, n));
      case Letter::P:
        return add(mul(24, n3), mul(3, n));
    }
  }
  throw DomainError("unknown chain family");
}

std::int64_t squeeze_relation(std::int64_t n, std::int64_t w_spiro) {
  require_length(n);
  using checked::add;
  using checked::mul;
  using checked::sub;
  const std::int64_t n2 = mul(n, n);
  const std::int64_t n3 = mul(n2, n);
  const std::int64_t numerator =
      sub(add(mul(36, w_spiro), mul(150, n3)), add(mul(270, n2), mul(177, n)));
  if (numerator % 25 != 0) {
    throw IntegrityError(std::to_string(w_spiro) +
                         " is not the Wiener index of a spiro chain of length " +
                         std::to_string(n) + " (36W + 150n^3 - 270n^2 - 177n = " +
                         std::to_string(numerator) + " is not divisible by 25)");
  }
  return numerator / 25;
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Bfs:
      return "bfs";
    case Method::Recurrence:
      return "recurrence";
    case Method::Closed:
      return "closed";
    case Method::Polynomial:
      return "polynomial";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : kAllMethods) {
    if (to_string(m) == text) return m;
  }
  throw ParseError("unknown method '" + std::string(text) +
                       "' (expected bfs, recurrence, closed or polynomial)",
                   0);
}

std::optional<std::int64_t> WienerReport::value(Method method) const {
  switch (method) {
    case Method::Bfs:
      return w_bfs;
    case Method::Recurrence:
      return w_recurrence;
    case Method::Closed:
      return w_closed;
    case Method::Polynomial:
      return w_polynomial;
  }
  return std::nullopt;
}

WienerReport compute_report(ChainKind kind, const CodeWord& code,
                            std::span<const Method> methods) {
  WienerReport report;
  report.code = canonicalize(code);
  report.kind = kind;
  report.n = code.n();
  if (kind == ChainKind::Spiro) {
    report.vertex_count = 5LL * code.n() + 1;
    report.edge_count = 6LL * code.n();
  } else {
    report.vertex_count = 6LL * code.n();
    report.edge_count = 7LL * code.n() - 1;
  }

  for (Method m : methods) {
    switch (m) {
      case Method::Bfs: {
        const ChainGraph chain = build_chain(kind, code);
        report.vertex_count =
            static_cast<std::int64_t>(chain.graph().vertex_count());
        report.edge_count = static_cast<std::int64_t>(chain.graph().edge_count());
        report.w_bfs = wiener_bfs(chain);
        break;
      }
      case Method::Recurrence:
        report.w_recurrence = wiener_recurrence(kind, code);
        break;
      case Method::Closed:
        report.w_closed = wiener_closed(kind, code);
        break;
      case Method::Polynomial: {
        if (!code.is_constant()) {
          throw DomainError("the polynomial method needs a constant code, got " +
                            code.to_string());
        }
        const Letter family = code.empty() ? Letter::M : code[0];
        report.w_polynomial = wiener_homogeneous(kind, family, code.n());
        break;
      }
    }
  }

  std::optional<std::int64_t> first;
  for (Method m : kAllMethods) {
    if (auto v = report.value(m)) {
      if (first && *first != *v) report.agree = false;
      if (!first) first = v;
    }
  }
  return report;
}

}  // namespace hexchain
