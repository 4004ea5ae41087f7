#include <chrono>
#include <limits>
#include <optional>
#include <ostream>
#include <random>

#include "hexchain/commands.hpp"
#include "hexchain/errors.hpp"

namespace hexchain::cli {

namespace {

CodeWord seeded_code(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Letter> letters(n <= 2 ? 0 : static_cast<std::size_t>(n - 2));
  for (Letter& x : letters) x = static_cast<Letter>(pick(rng));
  return CodeWord(std::move(letters), n);
}

}  // namespace

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<Method> methods;
  try {
    if (options.methods.empty()) {
      methods = {Method::Closed, Method::Recurrence, Method::Bfs};
    }
    for (const auto& m : options.methods) {
      const Method method = parse_method(m);
      if (method == Method::Polynomial) {
        throw ParseError("bench runs on random codes; polynomial is not applicable", 0);
      }
      methods.push_back(method);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (options.ns.empty() || options.repeat < 1) {
    err << "error: bench needs at least one --n value and --repeat >= 1\n";
    return kExitUsage;
  }
  for (int n : options.ns) {
    if (n < 1) {
      err << "error: --n values must be at least 1, got " << n << '\n';
      return kExitUsage;
    }
  }

  std::mt19937_64 rng(options.seed);
  out << "# seed=" << options.seed << " kind=" << to_string(options.kind)
      << " repeat=" << options.repeat << " bfs_max_n=" << options.bfs_max_n << '\n';
  out << "n,kind,method,vertices,best_seconds,wiener\n";

  bool agree = true;
  for (int n : options.ns) {
    const CodeWord code = seeded_code(rng, n);
    const std::int64_t vertices =
        options.kind == ChainKind::Spiro ? 5LL * n + 1 : 6LL * n;
    std::optional<std::int64_t> reference;
    for (Method method : methods) {
      if (method == Method::Bfs && n > options.bfs_max_n) {
        out << n << ',' << to_string(options.kind) << ",bfs," << vertices
            << ",skipped,\n";
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      std::int64_t w = 0;
      for (int r = 0; r < options.repeat; ++r) {
        const auto start = std::chrono::steady_clock::now();
        switch (method) {
          case Method::Closed:
            w = wiener_closed(options.kind, code);
            break;
          case Method::Recurrence:
            w = wiener_recurrence(options.kind, code);
            break;
          case Method::Bfs:
            w = wiener_bfs(build_chain(options.kind, code));
            break;
          case Method::Polynomial:
            break;
        }
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
      }
      if (reference && *reference != w) agree = false;
      if (!reference) reference = w;
      out << n << ',' << to_string(options.kind) << ',' << to_string(method) << ','
          << vertices << ',' << best << ',' << w << '\n';
    }
  }
  if (!agree) {
    err << "error: methods disagree on at least one benchmarked chain\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace hexchain::cli
