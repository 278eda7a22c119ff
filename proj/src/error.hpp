#pragma once

#include <stdexcept>
#include <string>

namespace matgrowth {

enum class ErrorCode {
  parse,        // malformed input text
  domain,       // precondition violated by otherwise well-formed input
  cap,          // configured resource cap exceeded
  unsupported,  // valid request that this build does not serve
  io,           // filesystem failure
  nonfinite,    // a numeric result broke the finiteness invariant
  internal,     // bug guard
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  static Error parse(const std::string& m) { return {ErrorCode::parse, m}; }
  static Error domain(const std::string& m) { return {ErrorCode::domain, m}; }
  static Error cap(const std::string& m) { return {ErrorCode::cap, m}; }
  static Error unsupported(const std::string& m) { return {ErrorCode::unsupported, m}; }
  static Error io(const std::string& m) { return {ErrorCode::io, m}; }
  static Error nonfinite(const std::string& m) { return {ErrorCode::nonfinite, m}; }
  static Error internal(const std::string& m) { return {ErrorCode::internal, m}; }

 private:
  ErrorCode code_;
};

}  // namespace matgrowth
