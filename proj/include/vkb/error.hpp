#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace vkb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based when known.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::optional<std::size_t> line = std::nullopt)
      : Error(line ? "line " + std::to_string(*line) + ": " + message : message),
        line_(line) {}

  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  std::optional<std::size_t> line_;
};

/// Structurally well-formed input that violates a diagram or ribbon-graph
/// invariant. `item` is the index of the offending crossing/vertex/edge when
/// one can be singled out.
class ValidationError : public Error {
 public:
  ValidationError(std::string message, std::optional<std::size_t> item = std::nullopt)
      : Error(std::move(message)), item_(item) {}

  std::optional<std::size_t> item() const noexcept { return item_; }

 private:
  std::optional<std::size_t> item_;
};

/// Operands live in different rings, or a variable is unknown to a ring.
class RingError : public Error {
 public:
  using Error::Error;
};

class SubstitutionError : public Error {
 public:
  using Error::Error;
};

/// A state or subgraph enumeration would exceed the configured cap.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace vkb
