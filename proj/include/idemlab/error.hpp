#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idemlab {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed term, identity, schema or algebra text. `position` is a 0-based
  // byte offset for single-line inputs; `line`/`column` are 1-based for files
  // (0 when not applicable).
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          _message(msg),
          _position(position) {}
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(msg + " at line " + std::to_string(line) + ", column "
                + std::to_string(column)),
          _message(msg),
          _position(0),
          _line(line),
          _column(column) {}

    // Message without the location suffix.
    std::string const& message() const noexcept {
      return _message;
    }
    std::size_t position() const noexcept {
      return _position;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::string _message;
    std::size_t _position;
    std::size_t _line   = 0;
    std::size_t _column = 0;
  };

  // Unparenthesized product or sum of three or more factors.
  class AmbiguityError : public ParseError {
   public:
    using ParseError::ParseError;
  };

  // Operation symbol outside the declared signature, or missing from an
  // algebra.
  class UnknownSymbolError : public Error {
   public:
    explicit UnknownSymbolError(char symbol)
        : Error(std::string("unknown operation symbol '") + symbol + "'"),
          _symbol(symbol) {}
    char symbol() const noexcept {
      return _symbol;
    }

   private:
    char _symbol;
  };

  class UnassignedVariableError : public Error {
   public:
    explicit UnassignedVariableError(char var)
        : Error(std::string("variable '") + var + "' has no assigned value") {}
  };

  class CapExceededError : public Error {
   public:
    using Error::Error;
  };

  class NotAssociativeError : public Error {
   public:
    using Error::Error;
  };

  class InvalidArgumentError : public Error {
   public:
    using Error::Error;
  };

}  // namespace idemlab
