#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indpoly/hypergraph.hpp"

namespace indpoly {

// Text form of a hypergraph, one directive per line:
//
//   # comment
//   name: triangle
//   mode: strict            (or extended; default strict)
//   vertices: a b c
//   edge: a b c
//   edge:                   (the empty edge, extended mode only)
//
// Vertex names are nonempty and whitespace free; they map to ids 0, 1, ...
// in declaration order.
struct HypergraphDocument {
  std::string name;
  Mode mode = Mode::Strict;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;

  friend bool operator==(const HypergraphDocument&, const HypergraphDocument&) = default;
};

// Throws Error with ParseError, EmptyEdgeInStrictMode, UndeclaredVertex or
// DuplicateVertex and the offending line number.
HypergraphDocument parse_document(std::string_view text);
std::string render_document(const HypergraphDocument& doc);

Hypergraph to_hypergraph(const HypergraphDocument& doc);
// Vertex id i is named "v<i>".
HypergraphDocument to_document(const Hypergraph& g, std::string name = {});

}  // namespace indpoly
