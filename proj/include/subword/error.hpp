#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subword {

/// Symbols of infinite words. Words over a field store canonical element indices.
using Symbol = std::uint32_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a textual input, annotated with a 0-based character position.
class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& message)
        : Error("position " + std::to_string(position) + ": " + message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace subword
