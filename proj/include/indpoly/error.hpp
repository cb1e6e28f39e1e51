#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace indpoly {

enum class Errc {
  UnknownVertex,
  UnknownEdge,
  InvalidEdge,
  WouldCreateEmptyEdge,
  EmptyEdgeContraction,
  EmptyEdgeSubdivision,
  LoopNotSupported,
  NoPivotAvailable,
  DegreeExceedsWindow,
  BadSubstitution,
  TooLarge,
  RecursionLimitExceeded,
  ParseError,
  EmptyEdgeInStrictMode,
  UndeclaredVertex,
  DuplicateVertex,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library. `line()` is nonzero only for
// errors raised while parsing a hypergraph document.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace indpoly
