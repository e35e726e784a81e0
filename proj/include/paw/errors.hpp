#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paw {

// Violated operation contract (caller error).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Textual input rejected; position is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        position(position),
        line(line),
        column(column) {}

  std::size_t position;
  std::size_t line;
  std::size_t column;
};

}  // namespace paw
