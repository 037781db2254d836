#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclic {

enum class Errc {
  NonIntegralGenus,
  NotAUnit,
  UnstableQuotient,
  NotADivisor,
  Inadmissible,
  ScaleExceeded,
  Disconnected,
  InconsistentStabilizer,
  AssumptionsViolated,
  PreconditionViolated,
  InconsistentPresentation,
  InvalidGraph,
  BadInput,
};

std::string_view to_string(Errc code);

// Every recoverable failure of the engine is reported through this type.
class StrataError : public std::runtime_error {
 public:
  StrataError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cyclic
