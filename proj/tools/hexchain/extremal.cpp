#include <ostream>

#include "hexchain/commands.hpp"
#include "hexchain/errors.hpp"

namespace hexchain::cli {

int cmd_extremal(const ExtremalOptions& options, std::ostream& out,
                 std::ostream& err) {
  if (options.n < 4 || options.top < 1) {
    err << "error: extremal needs --n >= 4 and --top >= 1\n";
    return kExitUsage;
  }
  if (options.n > options.limits.max_n) {
    err << "error: " << LimitExceededError(options.n, options.limits.max_n).what()
        << '\n';
    return kExitLimit;
  }

  const ExtremalRanking ranking = rank_extremal(
      options.kind, options.n, options.direction, options.top, options.limits);
  const auto verdicts = check_against_theorem(ranking);

  for (const RankedChain& entry : ranking.entries) {
    OutputRecord record("extremal");
    record.add("kind", std::string(to_string(ranking.kind)))
        .add("n", ranking.n)
        .add("direction", std::string(to_string(ranking.direction)))
        .add("rank", entry.rank)
        .add("code", entry.code.to_string())
        .add("w", entry.wiener);
    if (entry.rank <= static_cast<int>(verdicts.size())) {
      const RankVerdict& v = verdicts[static_cast<std::size_t>(entry.rank - 1)];
      record.add("matches_theorem", v.matches_theorem);
      if (!v.note.empty()) record.add("note", v.note);
    }
    record.write(out, options.format);
  }
  return kExitOk;
}

}  // namespace hexchain::cli
