#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dvf {

/// Machine-readable error category. The CLI maps these onto exit codes.
enum class ErrorCode {
  Structural,         // descriptor / rank mismatch
  Domain,             // argument outside the operation's domain
  Precision,          // truncation too coarse to decide the answer
  Parse,              // malformed series, model file or flag
  Unsupported,        // unsupported group or extension
  Precondition,       // an operation's hypothesis does not hold
  UndeclaredGenerator,
  SoundnessAlarm,     // an identity that must fail did not
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(ErrorCode::Structural, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(ErrorCode::Precision, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorCode::Unsupported, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

class UndeclaredGeneratorError : public Error {
 public:
  explicit UndeclaredGeneratorError(const std::string& what)
      : Error(ErrorCode::UndeclaredGenerator, what) {}
};

class SoundnessAlarm : public Error {
 public:
  explicit SoundnessAlarm(const std::string& what) : Error(ErrorCode::SoundnessAlarm, what) {}
};

/// Parse failure; `offset` is the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(ErrorCode::Parse, what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dvf
