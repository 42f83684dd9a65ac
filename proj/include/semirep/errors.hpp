#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semirep {

// Error buckets map onto CLI exit codes: Input -> 2, Internal -> 3.
// Verification failures of the `verify` subcommand are reported as data,
// not exceptions, and exit with code 1.
enum class ErrorClass { Input, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), cls_(cls), kind_(std::move(kind)) {}

  ErrorClass cls() const { return cls_; }
  const std::string& kind() const { return kind_; }

 private:
  ErrorClass cls_;
  std::string kind_;
};

[[noreturn]] inline void inputError(const std::string& kind, const std::string& msg) {
  throw Error(ErrorClass::Input, kind, msg);
}

[[noreturn]] inline void internalError(const std::string& kind, const std::string& msg) {
  throw Error(ErrorClass::Internal, kind, msg);
}

}  // namespace semirep
