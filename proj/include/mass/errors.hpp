#pragma once

#include <stdexcept>
#include <string>

namespace mass {

enum class Errc {
  // load-matrix parsing / construction
  NonSquare,
  DuplicateName,
  NegativeLoad,
  DiagonalNotVacant,
  MalformedCell,
  HeaderMismatch,
  TooLarge,
  // assignment
  NoUncoveredCell,
  NegativeEntry,
  SizeMismatch,
  IterationGuardExceeded,
  // layout
  NoCapacity,
  Infeasible,
  Unplaced,
  // misuse of an API outside its stated preconditions
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mass
