#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cmono/document.hpp"
#include "cmono/inertia.hpp"

namespace cmono {

struct ReportOptions {
  bool run_oracle = true;
  std::optional<long long> ell;   // display reduction of the monodromy block
  std::optional<long long> power; // modulus ell^power
};

struct AnalysisReport {
  nlohmann::ordered_json json;
  int exit_code = 0;

  std::string to_text() const;
  std::string to_dot() const;
};

// Full pipeline: parse/validate, clusters, skeleton, transvection plan,
// Gram matrices by every route, monodromy matrix, torsion identities, and
// the structural invariant suite.  Pre-analysis failures (parse,
// ultrametric, split degeneracy) throw AnalysisError; cross-check failures
// are reported with exit code 5 inside the report and also thrown after the
// report is assembled when `throw_on_verdict` is set.
AnalysisReport run_report(const InputDocument& doc, const ReportOptions& options);

}  // namespace cmono
