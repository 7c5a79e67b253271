#pragma once

#include <stdexcept>
#include <string>

namespace rrl {

enum class ErrorCode {
  Parse,
  DimensionMismatch,
  AlphabetUnsupported,
  LengthMismatch,
  NotMonotone,
  BudgetExceedsTrain,
  NotRegular,
  BadColoring,
  NotGapConstant,
  BadTarget,
  InstanceTooLarge,
  BadModel,
  Internal,
};

// Single exception type for the whole library. The CLI maps codes onto its
// documented exit codes; everything else just propagates.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace rrl
