#include <ostream>

#include "CLI11.hpp"
#include "hexchain/commands.hpp"
#include "hexchain/errors.hpp"

namespace hexchain::cli {

namespace {

ChainKind kind_option(const std::string& text) { return parse_kind(text); }

TableFormat table_format(const std::string& text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "jsonl" || text == "json-lines") return TableFormat::JsonLines;
  throw ParseError("unknown format '" + text + "' (expected csv or jsonl)", 0);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Wiener indices of spiro and polyphenyl hexagonal chains", "hexchain"};
  app.require_subcommand(1);

  std::string kind = "spiro";
  std::string format;

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "Wiener index of one chain");
  compute_cmd->add_option("--kind", kind, "spiro or polyphenyl");
  compute_cmd->add_option("--code", compute.code, "code word over O, M, P");
  compute_cmd->add_option("--n", compute.n, "chain length (required for empty codes)");
  compute_cmd->add_option("--methods", compute.methods,
                          "comma list of bfs, recurrence, closed, polynomial")
      ->delimiter(',');
  compute_cmd->add_option("--format", format, "kv or jsonl");

  EnumerateOptions enumerate;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List every distinct chain of length n");
  enumerate_cmd->add_option("--kind", kind, "spiro or polyphenyl");
  enumerate_cmd->add_option("--n", enumerate.n, "chain length")->required();
  enumerate_cmd->add_option("--format", format, "csv or jsonl");
  std::string output_path;
  enumerate_cmd->add_option("--output", output_path, "write to a file instead of stdout");
  enumerate_cmd->add_flag("--with-bfs", enumerate.with_bfs,
                          "add a BFS-computed w_bfs column");

  ExtremalOptions extremal;
  auto* extremal_cmd =
      app.add_subcommand("extremal", "Chains with the smallest or largest index");
  extremal_cmd->add_option("--kind", kind, "spiro or polyphenyl");
  extremal_cmd->add_option("--n", extremal.n, "chain length (>= 4)")->required();
  bool want_min = false;
  bool want_max = false;
  auto* min_flag = extremal_cmd->add_flag("--min", want_min, "rank from the minimum");
  auto* max_flag = extremal_cmd->add_flag("--max", want_max, "rank from the maximum");
  min_flag->excludes(max_flag);
  extremal_cmd->add_option("--top", extremal.top, "number of rank groups");
  extremal_cmd->add_option("--format", format, "kv or jsonl");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every invariant up to max-n");
  verify_cmd->add_option("--max-n", verify.max_n, "largest chain length");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form, recurrence and BFS");
  bench_cmd->add_option("--n", bench.ns, "chain lengths, comma separated")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--kind", kind, "spiro or polyphenyl");
  bench_cmd->add_option("--methods", bench.methods, "comma list of closed, recurrence, bfs")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "seed for random code words");
  bench_cmd->add_option("--repeat", bench.repeat, "timed repetitions per method");
  bench_cmd->add_option("--bfs-max-n", bench.bfs_max_n, "skip BFS above this length");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const EnumerationLimits limits = EnumerationLimits::from_environment();
    if (compute_cmd->parsed()) {
      compute.kind = kind_option(kind);
      if (!format.empty()) compute.format = parse_record_format(format);
      return cmd_compute(compute, out, err);
    }
    if (enumerate_cmd->parsed()) {
      enumerate.kind = kind_option(kind);
      if (!format.empty()) enumerate.format = table_format(format);
      if (!output_path.empty()) enumerate.output_path = output_path;
      enumerate.limits = limits;
      return cmd_enumerate(enumerate, out, err);
    }
    if (extremal_cmd->parsed()) {
      extremal.kind = kind_option(kind);
      extremal.direction = want_max ? Direction::Max : Direction::Min;
      if (!format.empty()) extremal.format = parse_record_format(format);
      extremal.limits = limits;
      return cmd_extremal(extremal, out, err);
    }
    if (verify_cmd->parsed()) {
      verify.limits = limits;
      return cmd_verify(verify, out, err);
    }
    if (bench_cmd->parsed()) {
      bench.kind = kind_option(kind);
      return cmd_bench(bench, out, err);
    }
  } catch (const LimitExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace hexchain::cli
