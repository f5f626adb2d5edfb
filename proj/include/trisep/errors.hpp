#pragma once

#include <stdexcept>
#include <string>

namespace trisep {

// CLI exit-code contract. Library errors map onto these.
enum class ExitCode : int {
  Ok = 0,
  VerificationFailed = 1,
  Precondition = 2,
  CapExceeded = 3,
  Contradiction = 4,
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const { return ExitCode::Precondition; }
};

/// A configured size cap would be exceeded (never truncate silently).
struct CapExceededError : Error {
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::CapExceeded; }
};

/// Input violates an operation's precondition (bad file, class violation, ...).
struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// The input violates the structural assumption this library builds on:
/// a recognizer transcript is attached so the failure can be audited.
struct ContradictionError : Error {
  explicit ContradictionError(const std::string& what, std::string transcript_ = {})
      : Error(what), transcript(std::move(transcript_)) {}
  ExitCode exit_code() const override { return ExitCode::Contradiction; }
  std::string transcript;
};

}  // namespace trisep
