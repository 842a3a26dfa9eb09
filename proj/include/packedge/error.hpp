#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace packedge {

// Precondition violated by the caller (bad edge id, malformed set, k out of
// range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The graph has no perfect matching, hence no 2-factor.
class NoTwoFactor : public std::runtime_error {
 public:
  NoTwoFactor() : std::runtime_error("graph has no 2-factor") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

}  // namespace packedge
