#pragma once

#include <stdexcept>
#include <string>

namespace qwerner {

// Base for all domain errors. `code()` is the stable machine-readable
// identifier used by the CLI's error objects and sweep error rows.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// n- diverges: the odd bipartite SCS is undefined at alpha_sq = beta_sq = 0.
struct DegenerateState : Error {
  explicit DegenerateState(const std::string& what) : Error("DegenerateState", what) {}
};

// N- diverges for a vacuum mode: the odd cat state of that mode is undefined.
struct DegenerateMode : Error {
  explicit DegenerateMode(const std::string& what) : Error("DegenerateMode", what) {}
};

struct MixingOutOfRange : Error {
  explicit MixingOutOfRange(const std::string& what) : Error("MixingOutOfRange", what) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& what) : Error("NotHermitian", what) {}
};

// Measurement branch with p <= 1e-14; callers skip the branch (its entropy
// contribution is exactly 0).
struct ZeroProbabilityOutcome : Error {
  explicit ZeroProbabilityOutcome(const std::string& what)
      : Error("ZeroProbabilityOutcome", what) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what) : Error("NoConvergence", what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

}  // namespace qwerner
