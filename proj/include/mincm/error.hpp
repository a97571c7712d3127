#pragma once

#include <stdexcept>
#include <string>

namespace mincm {

enum class ErrorKind {
  MalformedInput,
  Parse,
  Io,
  FaceNotInComplex,
  NotAFacet,
  OutOfRange,
  NotPure,
  NotCohenMacaulay,
  DegenerateIdeal,
  UnknownCatalogName,
  DataNotBundled,
  TooLarge,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace mincm
