#include "curb/error.hpp"

#include <utility>

namespace curb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return "UsageError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::ExplicitIndexOutOfRange: return "ExplicitIndexOutOfRange";
    case ErrorCode::VocabularyViolation: return "VocabularyViolation";
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::RuleRuntimeError: return "RuleRuntimeError";
    case ErrorCode::NoEmitExecuted: return "NoEmitExecuted";
    case ErrorCode::EmittedValueOutOfDomain: return "EmittedValueOutOfDomain";
    case ErrorCode::UnparsableCapture: return "UnparsableCapture";
    case ErrorCode::NonConstantMilieuIndex: return "NonConstantMilieuIndexInFaithfulMode";
    case ErrorCode::NoApplicableOperator: return "NoApplicableOperator";
    case ErrorCode::AdaptationFailed: return "AdaptationFailed";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
    case ErrorCode::ConfigSemanticError: return "ConfigSemanticError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigParseError:
    case ErrorCode::ConfigSemanticError:
    case ErrorCode::DomainMismatch:
    case ErrorCode::CountMismatch:
    case ErrorCode::ExplicitIndexOutOfRange:
      return 2;
    case ErrorCode::VocabularyViolation:
    case ErrorCode::LexError:
    case ErrorCode::SyntaxError:
    case ErrorCode::ValidationError:
      return 3;
    case ErrorCode::RuleRuntimeError:
    case ErrorCode::NoEmitExecuted:
    case ErrorCode::EmittedValueOutOfDomain:
    case ErrorCode::UnparsableCapture:
    case ErrorCode::NonConstantMilieuIndex:
      return 4;
    case ErrorCode::NoApplicableOperator:
    case ErrorCode::AdaptationFailed:
      return 5;
    case ErrorCode::Usage:
    case ErrorCode::IoError:
      return 1;
  }
  return 1;
}

std::string to_string(const SourcePosition& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

Error::Error(ErrorCode code, std::string detail) : code_(code), detail_(std::move(detail)) {
  rebuild();
}

void Error::annotate(std::size_t entity, std::uint64_t iteration) {
  entity_ = entity;
  iteration_ = iteration;
  rebuild();
}

void Error::rebuild() {
  message_ = std::string(to_string(code_));
  if (!detail_.empty()) {
    message_ += ": ";
    message_ += detail_;
  }
  if (entity_ && iteration_) {
    message_ += " (entity " + std::to_string(*entity_) + ", t=" + std::to_string(*iteration_) + ")";
  }
}

VocabularyViolation::VocabularyViolation(std::string word, SourcePosition position)
    : Error(ErrorCode::VocabularyViolation,
            "\"" + word + "\" at " + to_string(position) + " is not in the rule vocabulary"),
      word_(std::move(word)),
      position_(position) {}

LexError::LexError(std::string detail, SourcePosition position)
    : Error(ErrorCode::LexError, detail + " at " + to_string(position)), position_(position) {}

SyntaxError::SyntaxError(std::string expected, std::string found, SourcePosition position)
    : Error(ErrorCode::SyntaxError,
            "expected " + expected + ", found " + found + " at " + to_string(position)),
      expected_(std::move(expected)),
      found_(std::move(found)),
      position_(position) {}

std::string_view to_string(ValidationFailure failure) {
  switch (failure) {
    case ValidationFailure::BadIdentifier: return "BadIdentifier";
    case ValidationFailure::TypeMismatch: return "TypeMismatch";
    case ValidationFailure::NoEmit: return "NoEmit";
    case ValidationFailure::MilieuIndexOutOfRange: return "MilieuIndexOutOfRange";
  }
  return "?";
}

ValidationError::ValidationError(ValidationFailure failure, std::string detail)
    : Error(ErrorCode::ValidationError, std::string(to_string(failure)) + " " + detail),
      failure_(failure) {}

std::string_view to_string(RuntimeFault fault) {
  switch (fault) {
    case RuntimeFault::DivisionByZero: return "DivisionByZero";
    case RuntimeFault::NegativeMilieuIndex: return "NegativeMilieuIndex";
    case RuntimeFault::MilieuIndexOutOfRange: return "MilieuIndexOutOfRange";
    case RuntimeFault::ArithmeticOverflow: return "ArithmeticOverflow";
    case RuntimeFault::FuelExhausted: return "FuelExhausted";
  }
  return "?";
}

RuleRuntimeError::RuleRuntimeError(RuntimeFault fault, std::string detail)
    : Error(ErrorCode::RuleRuntimeError, std::string(to_string(fault)) + " " + detail), fault_(fault) {}

ConfigError::ConfigError(ErrorCode code, std::size_t line, std::string detail)
    : Error(code, line > 0 ? "line " + std::to_string(line) + ": " + detail : detail), line_(line) {}

}  // namespace curb
