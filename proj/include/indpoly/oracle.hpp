#pragma once

#include <cstddef>

#include "indpoly/hypergraph.hpp"
#include "indpoly/multipoly.hpp"
#include "indpoly/unipoly.hpp"

// Exhaustive enumeration over vertex subsets. Slow on purpose: these are the
// reference values every recurrence engine is checked against.
namespace indpoly::oracle {

struct Limits {
  std::size_t max_vertices = 24;
  std::size_t gscp_max_vertices = 10;
  std::size_t gscp_max_edges = 10;
};

struct RestrictionSpec {
  VertexSet must_include;
  VertexSet must_exclude;
};

UniPoly independence_poly_bf(const Hypergraph& g, const Limits& limits = {});
UniPoly restricted_independence_poly_bf(const Hypergraph& g, const RestrictionSpec& r,
                                        const Limits& limits = {});
UniPoly vertex_cover_poly_bf(const Hypergraph& g, const Limits& limits = {});
// Sum over subgraphs H = (W, F), F ranging over edge occurrences inside W.
MultiPoly4 gscp_bf(const Hypergraph& g, const Limits& limits = {});
Integer sigma_bf(const Hypergraph& g, const Limits& limits = {});

}  // namespace indpoly::oracle
