#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "indpoly/error.hpp"

namespace indpoly {

using VertexId = std::uint32_t;

// A finite set of vertex ids, kept sorted and free of duplicates.
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  // Caller guarantees `ids` is strictly increasing.
  static VertexSet from_sorted(std::vector<VertexId> ids);

  bool contains(VertexId v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  VertexId front() const { return ids_.front(); }
  VertexId back() const { return ids_.back(); }
  VertexId operator[](std::size_t i) const { return ids_[i]; }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// An edge is a vertex set; in strict mode it must be nonempty.
using Edge = VertexSet;

// Handle to one occurrence in a hypergraph's edge multiset.
struct EdgeRef {
  std::size_t index = 0;
  friend bool operator==(EdgeRef, EdgeRef) = default;
};

enum class Mode { Strict, Extended };

// Vertex set plus edge multiset. Immutable after construction; every graph
// operation below returns a new value. Edge occurrences keep their relative
// order through operations, so EdgeRef indices are stable within one value.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(VertexSet vertices, std::vector<Edge> edges, Mode mode = Mode::Strict);

  static Hypergraph edgeless(std::size_t n, Mode mode = Mode::Strict);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeRef e) const;
  Mode mode() const noexcept { return mode_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool has_empty_edge() const;
  bool has_loop_at(VertexId v) const;
  std::size_t degree(VertexId v) const;

  // Every edge has exactly two vertices and no edge is repeated.
  bool is_simple_graph() const;

  // Multiset equality: same vertices, same mode, same edges up to order.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  struct Unchecked {};
  Hypergraph(Unchecked, VertexSet vertices, std::vector<Edge> edges, Mode mode)
      : vertices_(std::move(vertices)), edges_(std::move(edges)), mode_(mode) {}

  friend Hypergraph delete_vertices(const Hypergraph&, const VertexSet&);
  friend Hypergraph hide_vertices(const Hypergraph&, const VertexSet&);
  friend Hypergraph delete_edge(const Hypergraph&, EdgeRef);
  friend Hypergraph contract_edge(const Hypergraph&, EdgeRef);
  friend Hypergraph subdivide_edge(const Hypergraph&, EdgeRef);
  friend Hypergraph induced_subgraph(const Hypergraph&, const VertexSet&);
  friend Hypergraph normalize(const Hypergraph&);

  VertexSet vertices_;
  std::vector<Edge> edges_;
  Mode mode_ = Mode::Strict;
};

// G_{-W}: removes W and every edge meeting W.
Hypergraph delete_vertices(const Hypergraph& g, const VertexSet& w);
// G_{†W}: removes W from the vertex set and from every edge. Strict mode
// refuses to produce an empty edge.
Hypergraph hide_vertices(const Hypergraph& g, const VertexSet& w);
Hypergraph delete_edge(const Hypergraph& g, EdgeRef e);
// Merges the vertices of `e` into min(e). Contracting a loop only drops it.
Hypergraph contract_edge(const Hypergraph& g, EdgeRef e);
// Replaces `e` by a fresh vertex d = max(V)+1 joined to each vertex of e.
Hypergraph subdivide_edge(const Hypergraph& g, EdgeRef e);
Hypergraph induced_subgraph(const Hypergraph& g, const VertexSet& w);

// Vertices sharing an edge with a different member of W. Members of W can
// appear when they are co-edged with another member.
VertexSet open_neighborhood(const Hypergraph& g, const VertexSet& w);
VertexSet closed_neighborhood(const Hypergraph& g, const VertexSet& w);

// Ordered by smallest member. Empty edges belong to no component.
std::vector<VertexSet> connected_components(const Hypergraph& g);

bool is_independent(const Hypergraph& g, const VertexSet& w);
bool is_vertex_cover(const Hypergraph& g, const VertexSet& w);

// Drops repeated edges and proper supersets of other edges. Preserves the
// independence and vertex cover polynomials.
Hypergraph normalize(const Hypergraph& g);

// Order-preserving relabel to 0..n-1, edges sorted, mode byte appended.
// Labeled only: isomorphic but differently labeled inputs get distinct keys.
std::string canonical_key(const Hypergraph& g);

// Copy of `g` with a different mode flag. Switching to strict mode fails if
// `g` has an empty edge.
Hypergraph with_mode(const Hypergraph& g, Mode mode);

// Relabels `b` above max(V(a)) and joins the two.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

std::string to_string(const Hypergraph& g);

}  // namespace indpoly
