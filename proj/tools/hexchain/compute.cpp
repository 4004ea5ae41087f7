#include <ostream>

#include "hexchain/commands.hpp"
#include "hexchain/errors.hpp"

namespace hexchain::cli {

int cmd_compute(const ComputeOptions& options, std::ostream& out,
                std::ostream& err) {
  CodeWord code;
  std::vector<Method> methods;
  try {
    code = parse_code(options.code, options.n);
    for (const auto& m : options.methods) methods.push_back(parse_method(m));
    if (methods.empty()) {
      if (code.n() <= kDefaultBfsMaxN) methods.push_back(Method::Bfs);
      methods.push_back(Method::Recurrence);
      methods.push_back(Method::Closed);
      if (code.is_constant()) methods.push_back(Method::Polynomial);
    } else if (!code.is_constant()) {
      for (Method m : methods) {
        if (m == Method::Polynomial) {
          throw DomainError("the polynomial method needs a constant code, got " +
                            code.to_string());
        }
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const WienerReport report = compute_report(options.kind, code, methods);
  OutputRecord record("wiener");
  record.add("kind", std::string(to_string(report.kind)))
      .add("code", report.code.to_string())
      .add("n", report.n)
      .add("vertices", report.vertex_count)
      .add("edges", report.edge_count);
  for (Method m : kAllMethods) {
    if (auto v = report.value(m)) record.add("w_" + std::string(to_string(m)), *v);
  }
  record.add("agree", report.agree);
  record.write(out, options.format);

  if (!report.agree) {
    err << "error: methods disagree for " << to_string(report.kind) << " chain '"
        << report.code.to_string() << "'\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace hexchain::cli
