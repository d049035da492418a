#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evoiso {

/// A configured work cap was exceeded. Callers must treat this as
/// "undecided", never as a negative result.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text-input error carrying a byte offset into the source.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

}  // namespace evoiso
