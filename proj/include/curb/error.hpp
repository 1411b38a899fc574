#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>

namespace curb {

/// Every failure raised by the kernel carries one of these codes. The code
/// decides the CLI exit status; the concrete exception type carries the
/// payload (offending word, syntax expectation, runtime fault, ...).
enum class ErrorCode {
  Usage,
  DomainMismatch,
  CountMismatch,
  ExplicitIndexOutOfRange,
  VocabularyViolation,
  LexError,
  SyntaxError,
  ValidationError,
  RuleRuntimeError,
  NoEmitExecuted,
  EmittedValueOutOfDomain,
  UnparsableCapture,
  NonConstantMilieuIndex,
  NoApplicableOperator,
  AdaptationFailed,
  ConfigParseError,
  ConfigSemanticError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Process exit status for a failure of the given code.
int exit_code_for(ErrorCode code);

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

std::string to_string(const SourcePosition& pos);

class Error : public std::exception {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const char* what() const noexcept override { return message_.c_str(); }

  // Attaches the entity and iteration a step failed on. Called on the
  // in-flight exception so the dynamic type survives a rethrow.
  void annotate(std::size_t entity, std::uint64_t iteration);

  std::optional<std::size_t> entity() const noexcept { return entity_; }
  std::optional<std::uint64_t> iteration() const noexcept { return iteration_; }

 private:
  void rebuild();

  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> entity_;
  std::optional<std::uint64_t> iteration_;
  std::string message_;
};

/// A word or character outside the closed vocabulary.
class VocabularyViolation : public Error {
 public:
  VocabularyViolation(std::string word, SourcePosition position);

  const std::string& word() const noexcept { return word_; }
  SourcePosition position() const noexcept { return position_; }

 private:
  std::string word_;
  SourcePosition position_;
};

class LexError : public Error {
 public:
  LexError(std::string detail, SourcePosition position);

  SourcePosition position() const noexcept { return position_; }

 private:
  SourcePosition position_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string expected, std::string found, SourcePosition position);

  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }
  SourcePosition position() const noexcept { return position_; }

 private:
  std::string expected_;
  std::string found_;
  SourcePosition position_;
};

enum class ValidationFailure { BadIdentifier, TypeMismatch, NoEmit, MilieuIndexOutOfRange };

std::string_view to_string(ValidationFailure failure);

class ValidationError : public Error {
 public:
  ValidationError(ValidationFailure failure, std::string detail);

  ValidationFailure failure() const noexcept { return failure_; }

 private:
  ValidationFailure failure_;
};

enum class RuntimeFault {
  DivisionByZero,
  NegativeMilieuIndex,
  MilieuIndexOutOfRange,
  ArithmeticOverflow,
  FuelExhausted,
};

std::string_view to_string(RuntimeFault fault);

class RuleRuntimeError : public Error {
 public:
  RuleRuntimeError(RuntimeFault fault, std::string detail);

  RuntimeFault fault() const noexcept { return fault_; }

 private:
  RuntimeFault fault_;
};

/// ConfigParseError / ConfigSemanticError; line is 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(ErrorCode code, std::size_t line, std::string detail);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace curb
