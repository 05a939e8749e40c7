#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qdc {

// Library error with a stable machine-readable code alongside the message.
// Codes are kebab-case identifiers such as "nonunit-divisor" or
// "pole-at-point"; the CLI maps them into JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace qdc
