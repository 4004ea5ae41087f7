#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hexchain/checked_math.hpp"
#include "hexchain/commands.hpp"
#include "hexchain/errors.hpp"
#include "json.hpp"

namespace hexchain::cli {

namespace {

void write_rows(const EnumerateOptions& options, std::ostream& out,
                std::uint64_t& count, std::int64_t& sum) {
  const std::string kind(to_string(options.kind));
  if (options.format == TableFormat::Csv) {
    out << "code,kind,n,w_closed" << (options.with_bfs ? ",w_bfs" : "") << '\n';
  }
  for_each_chain(options.n, options.limits, [&](const CodeWord& code) {
    const std::int64_t w = wiener_closed(options.kind, code);
    std::optional<std::int64_t> bfs;
    if (options.with_bfs) bfs = wiener_bfs(build_chain(options.kind, code));
    ++count;
    sum = checked::add(sum, w);
    if (options.format == TableFormat::Csv) {
      out << code.to_string() << ',' << kind << ',' << code.n() << ',' << w;
      if (bfs) out << ',' << *bfs;
      out << '\n';
    } else {
      nlohmann::ordered_json row;
      row["code"] = code.to_string();
      row["kind"] = kind;
      row["n"] = code.n();
      row["w_closed"] = w;
      if (bfs) row["w_bfs"] = *bfs;
      out << row.dump() << '\n';
    }
  });
}

}  // namespace

int cmd_enumerate(const EnumerateOptions& options, std::ostream& out,
                  std::ostream& err) {
  if (options.n < 1) {
    err << "error: --n must be at least 1\n";
    return kExitUsage;
  }
  if (options.n > options.limits.max_n) {
    err << "error: " << LimitExceededError(options.n, options.limits.max_n).what()
        << '\n';
    return kExitLimit;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (options.output_path) {
    file.open(*options.output_path);
    if (!file) {
      err << "error: cannot open '" << *options.output_path << "' for writing\n";
      return kExitIo;
    }
    sink = &file;
  }

  std::uint64_t count = 0;
  std::int64_t sum = 0;
  write_rows(options, *sink, count, sum);

  const ChainCensus census = count_chains(options.n);
  const std::int64_t expected_mean = average_wiener(options.kind, options.n);
  const bool exact = sum % static_cast<std::int64_t>(count) == 0;
  const bool ok = count == census.distinct && exact &&
                  sum / static_cast<std::int64_t>(count) == expected_mean;
  *sink << "# count=" << count << " expected_count=" << census.distinct
        << " sum=" << sum << " mean=";
  if (exact) {
    *sink << sum / static_cast<std::int64_t>(count);
  } else {
    *sink << sum << '/' << count;
  }
  *sink << " expected_mean=" << expected_mean << " ok=" << (ok ? "true" : "false")
        << '\n';

  sink->flush();
  if (!*sink) {
    err << "error: failed writing enumeration output\n";
    return kExitIo;
  }
  if (!ok) {
    err << "error: enumeration summary does not match the census/average formulas\n";
    return kExitMismatch;
  }
  return kExitOk;
}

namespace {

std::int64_t to_int(const std::string& text) {
  std::size_t used = 0;
  const long long v = std::stoll(text, &used);
  if (used != text.size()) throw ParseError("not an integer: '" + text + "'", 0);
  return v;
}

}  // namespace

std::vector<EnumerationRow> read_enumeration(std::istream& in, TableFormat format) {
  std::vector<EnumerationRow> rows;
  std::string line;
  bool header_seen = format != TableFormat::Csv;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    EnumerationRow row;
    if (format == TableFormat::Csv) {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      if (cells.size() != 4 && cells.size() != 5) {
        throw ParseError("malformed CSV row: '" + line + "'", 0);
      }
      row.kind = parse_kind(cells[1]);
      row.code = parse_code(cells[0], static_cast<int>(to_int(cells[2])));
      row.w_closed = to_int(cells[3]);
      if (cells.size() == 5) row.w_bfs = to_int(cells[4]);
    } else {
      const auto j = nlohmann::json::parse(line);
      row.kind = parse_kind(j.at("kind").get<std::string>());
      row.code = parse_code(j.at("code").get<std::string>(), j.at("n").get<int>());
      row.w_closed = j.at("w_closed").get<std::int64_t>();
      if (j.contains("w_bfs")) row.w_bfs = j.at("w_bfs").get<std::int64_t>();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hexchain::cli
