#pragma once

#include <stdexcept>
#include <string>

namespace cmono {

// Process exit codes double as machine-readable failure classes.
enum class ErrorCode : int {
  Ok = 0,
  Parse = 2,           // malformed input, bad config, duplicate roots
  Ultrametric = 3,     // valuation matrix fails the ultrametric test
  SplitDegeneracy = 4, // margin/structure checks for split degenerate reduction
  Verdict = 5,         // a cross-check between independent routes failed
};

class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw AnalysisError(code, message);
}

}  // namespace cmono
