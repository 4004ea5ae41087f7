#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hexchain/chain_graph.hpp"
#include "hexchain/enumeration.hpp"
#include "hexchain/output.hpp"
#include "hexchain/wiener.hpp"

namespace hexchain::cli {

// Process exit codes. Stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,     // bad flags, unparsable code word
  kExitMismatch = 3,  // methods disagree or an invariant failed
  kExitIo = 4,
  kExitLimit = 5,  // exhaustive limit refused the request
};

// Chains longer than this skip BFS unless it is requested explicitly.
inline constexpr int kDefaultBfsMaxN = 2000;

struct ComputeOptions {
  ChainKind kind = ChainKind::Spiro;
  std::string code;
  std::optional<int> n;
  std::vector<std::string> methods;  // empty: every applicable method
  RecordFormat format = RecordFormat::KeyValue;
};

enum class TableFormat { Csv, JsonLines };

struct EnumerateOptions {
  ChainKind kind = ChainKind::Spiro;
  int n = 0;
  TableFormat format = TableFormat::Csv;
  std::optional<std::string> output_path;
  bool with_bfs = false;
  EnumerationLimits limits;
};

struct ExtremalOptions {
  ChainKind kind = ChainKind::Spiro;
  int n = 0;
  Direction direction = Direction::Min;
  int top = 3;
  RecordFormat format = RecordFormat::KeyValue;
  EnumerationLimits limits;
};

struct VerifyOptions {
  int max_n = 9;
  EnumerationLimits limits;
};

struct BenchOptions {
  std::vector<int> ns;
  ChainKind kind = ChainKind::Spiro;
  std::vector<std::string> methods;  // empty: closed, recurrence, bfs
  std::uint64_t seed = 42;
  int repeat = 3;
  int bfs_max_n = 5000;
};

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& options, std::ostream& out,
                  std::ostream& err);
int cmd_extremal(const ExtremalOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

// Full command line, args[0] being the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// One parsed row of `enumerate` output.
struct EnumerationRow {
  CodeWord code;
  ChainKind kind = ChainKind::Spiro;
  std::int64_t w_closed = 0;
  std::optional<std::int64_t> w_bfs;
};

// Reads back CSV or JSON-lines rows written by `enumerate`, skipping the
// header and '#' summary lines.
std::vector<EnumerationRow> read_enumeration(std::istream& in, TableFormat format);

}  // namespace hexchain::cli
