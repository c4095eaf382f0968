#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace twistor {

/// Error raised when an operation's mathematical precondition fails.
/// `code()` is a stable machine-readable identifier; the what() string
/// carries human-readable detail.
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code,
                               const std::string& message) {
    throw DomainError(code, message);
}

}  // namespace twistor
