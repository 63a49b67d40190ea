#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supertorus {

/// Malformed literal; position is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace supertorus
