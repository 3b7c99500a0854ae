/* Error taxonomy shared by the whole library.
 *
 * Every failure the engine can produce carries a stable code so the CLI can
 * map it to an exit status and reports can name it precisely.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace detsing {

enum class ErrorCode {
  Io,
  Parse,
  UnknownVariable,
  BadIndex,
  BadParameter,
  EntryNotVanishing,
  NegativeExpectedDimension,
  NotDeterminantal,
  NotOriginPreserving,
  NonIsolated,
  NonFiniteCriticalScheme,
  GenericityUnstable,
  WrongPolarDimension,
  SaturationDiverged,
  Timeout,
  Internal,
};

class DsError : public std::runtime_error {
 public:
  DsError(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::UnknownVariable: return "unknown-variable";
    case ErrorCode::BadIndex: return "bad-index";
    case ErrorCode::BadParameter: return "bad-parameter";
    case ErrorCode::EntryNotVanishing: return "entry-not-vanishing";
    case ErrorCode::NegativeExpectedDimension: return "negative-expected-dimension";
    case ErrorCode::NotDeterminantal: return "not-determinantal";
    case ErrorCode::NotOriginPreserving: return "not-origin-preserving";
    case ErrorCode::NonIsolated: return "non-isolated";
    case ErrorCode::NonFiniteCriticalScheme: return "non-finite-critical-scheme";
    case ErrorCode::GenericityUnstable: return "genericity-unstable";
    case ErrorCode::WrongPolarDimension: return "wrong-polar-dimension";
    case ErrorCode::SaturationDiverged: return "saturation-diverged";
    case ErrorCode::Timeout: return "timeout";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

// Always-on invariant check (tests run optimized; assert() would vanish).
#define DS_CHECK(cond, msg)                                              \
  do {                                                                   \
    if (!(cond))                                                         \
      throw ::detsing::DsError(::detsing::ErrorCode::Internal,           \
                               std::string("internal check failed: ") +  \
                                   (msg));                               \
  } while (0)

}  // namespace detsing
