#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcomm {

enum class ErrorCode {
  InvalidArgument,
  InvalidSpec,
  ParseError,
  OrderCap,
  BadAction,
  IndexOutOfRange,
  NotNormal,
  NotComparable,
  Infeasible,
  InternalInconsistency,
  SingularMatrix,
  AbelianGroup,
  PoleHit,
  SpectrumStatsMismatch,
  NotEnoughData,
  NonSpectralSequence,
  NotCoprime,
  NotCyclic,
  FormulaMismatch,
  SpectrumMismatch,
  HypothesisFails,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace hcomm
