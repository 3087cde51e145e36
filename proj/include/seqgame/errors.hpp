#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqgame {

/// A configured resource cap (arena nodes, integer size, unit expansion) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input is outside the shape an operation is defined on.
class FormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text. `offset()` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace seqgame
