#include "indpoly/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace indpoly {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::WouldCreateEmptyEdge: return "WouldCreateEmptyEdge";
    case Errc::EmptyEdgeContraction: return "EmptyEdgeContraction";
    case Errc::EmptyEdgeSubdivision: return "EmptyEdgeSubdivision";
    case Errc::LoopNotSupported: return "LoopNotSupported";
    case Errc::NoPivotAvailable: return "NoPivotAvailable";
    case Errc::DegreeExceedsWindow: return "DegreeExceedsWindow";
    case Errc::BadSubstitution: return "BadSubstitution";
    case Errc::TooLarge: return "TooLarge";
    case Errc::RecursionLimitExceeded: return "RecursionLimitExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyEdgeInStrictMode: return "EmptyEdgeInStrictMode";
    case Errc::UndeclaredVertex: return "UndeclaredVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_sorted(std::vector<VertexId> ids) {
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

// ---------------------------------------------------------------------------
// Hypergraph

namespace {

void require_known(const Hypergraph& g, const VertexSet& w) {
  for (VertexId v : w) {
    if (!g.has_vertex(v)) {
      throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " is not in the hypergraph");
    }
  }
}

void require_edge(const Hypergraph& g, EdgeRef e) {
  if (e.index >= g.num_edges()) {
    throw Error(Errc::UnknownEdge, "edge occurrence " + std::to_string(e.index) + " does not exist");
  }
}

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Hypergraph::Hypergraph(VertexSet vertices, std::vector<Edge> edges, Mode mode)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), mode_(mode) {
  for (const Edge& e : edges_) {
    if (e.empty() && mode_ == Mode::Strict) {
      throw Error(Errc::EmptyEdgeInStrictMode, "empty edge in a strict-mode hypergraph");
    }
    if (!e.is_subset_of(vertices_)) {
      throw Error(Errc::InvalidEdge, "edge mentions a vertex outside the vertex set");
    }
  }
}

Hypergraph Hypergraph::edgeless(std::size_t n, Mode mode) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return Hypergraph(Unchecked{}, VertexSet::from_sorted(std::move(ids)), {}, mode);
}

const Edge& Hypergraph::edge(EdgeRef e) const {
  require_edge(*this, e);
  return edges_[e.index];
}

bool Hypergraph::has_empty_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.empty(); });
}

bool Hypergraph::has_loop_at(VertexId v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [v](const Edge& e) { return e.size() == 1 && e.front() == v; });
}

std::size_t Hypergraph::degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

bool Hypergraph::is_simple_graph() const {
  if (!std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.size() == 2; })) {
    return false;
  }
  auto sorted = sorted_edges(edges_);
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.mode_ == b.mode_ && a.vertices_ == b.vertices_ &&
         sorted_edges(a.edges_) == sorted_edges(b.edges_);
}

// ---------------------------------------------------------------------------
// Operations

Hypergraph delete_vertices(const Hypergraph& g, const VertexSet& w) {
  require_known(g, w);
  std::vector<Edge> edges;
  edges.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) {
    if (!e.intersects(w)) edges.push_back(e);
  }
  return Hypergraph(Hypergraph::Unchecked{}, set_difference(g.vertices_, w), std::move(edges), g.mode_);
}

Hypergraph hide_vertices(const Hypergraph& g, const VertexSet& w) {
  require_known(g, w);
  std::vector<Edge> edges;
  edges.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) {
    if (!e.intersects(w)) {
      edges.push_back(e);
      continue;
    }
    Edge rest = set_difference(e, w);
    if (rest.empty() && g.mode_ == Mode::Strict) {
      throw Error(Errc::WouldCreateEmptyEdge, "hiding would leave an empty edge in strict mode");
    }
    edges.push_back(std::move(rest));
  }
  return Hypergraph(Hypergraph::Unchecked{}, set_difference(g.vertices_, w), std::move(edges), g.mode_);
}

Hypergraph delete_edge(const Hypergraph& g, EdgeRef e) {
  require_edge(g, e);
  std::vector<Edge> edges = g.edges_;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e.index));
  return Hypergraph(Hypergraph::Unchecked{}, g.vertices_, std::move(edges), g.mode_);
}

Hypergraph contract_edge(const Hypergraph& g, EdgeRef e) {
  require_edge(g, e);
  const Edge& target = g.edges_[e.index];
  if (target.empty()) {
    throw Error(Errc::EmptyEdgeContraction, "cannot contract an empty edge");
  }
  const Edge survivor{target.front()};
  std::vector<Edge> edges;
  edges.reserve(g.edges_.size() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    if (i == e.index) continue;
    const Edge& f = g.edges_[i];
    if (f.intersects(target)) {
      edges.push_back(set_union(set_difference(f, target), survivor));
    } else {
      edges.push_back(f);
    }
  }
  VertexSet vertices = set_union(set_difference(g.vertices_, target), survivor);
  return Hypergraph(Hypergraph::Unchecked{}, std::move(vertices), std::move(edges), g.mode_);
}

Hypergraph subdivide_edge(const Hypergraph& g, EdgeRef e) {
  require_edge(g, e);
  const Edge& target = g.edges_[e.index];
  if (target.empty()) {
    throw Error(Errc::EmptyEdgeSubdivision, "cannot subdivide an empty edge");
  }
  const VertexId d = g.vertices_.empty() ? 0 : g.vertices_.back() + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edges_.size() + target.size());
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    if (i != e.index) edges.push_back(g.edges_[i]);
  }
  for (VertexId v : target) edges.push_back(Edge{v, d});
  std::vector<VertexId> ids = g.vertices_.ids();
  ids.push_back(d);
  return Hypergraph(Hypergraph::Unchecked{}, VertexSet::from_sorted(std::move(ids)), std::move(edges), g.mode_);
}

Hypergraph induced_subgraph(const Hypergraph& g, const VertexSet& w) {
  require_known(g, w);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges_) {
    if (e.is_subset_of(w)) edges.push_back(e);
  }
  return Hypergraph(Hypergraph::Unchecked{}, w, std::move(edges), g.mode_);
}

VertexSet open_neighborhood(const Hypergraph& g, const VertexSet& w) {
  require_known(g, w);
  std::vector<VertexId> out;
  for (const Edge& e : g.edges()) {
    VertexSet inside = set_intersection(e, w);
    if (inside.empty()) continue;
    for (VertexId v : e) {
      // v needs a partner in W different from itself.
      if (inside.size() > 1 || inside.front() != v) out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Hypergraph& g, const VertexSet& w) {
  return set_union(open_neighborhood(g, w), w);
}

std::vector<VertexSet> connected_components(const Hypergraph& g) {
  const auto& ids = g.vertices().ids();
  const std::size_t n = ids.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  for (const Edge& e : g.edges()) {
    if (e.size() < 2) continue;
    const std::size_t root = find(index_of(e.front()));
    for (std::size_t k = 1; k < e.size(); ++k) {
      const std::size_t other = find(index_of(e[k]));
      if (other != root) parent[other] = root;
    }
  }
  // Components come out ordered by smallest member because vertices are
  // scanned in increasing order.
  std::vector<std::size_t> slot(n, n);
  std::vector<std::vector<VertexId>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(ids[i]);
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.push_back(VertexSet::from_sorted(std::move(grp)));
  return out;
}

bool is_independent(const Hypergraph& g, const VertexSet& w) {
  require_known(g, w);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return e.is_subset_of(w); });
}

bool is_vertex_cover(const Hypergraph& g, const VertexSet& w) {
  require_known(g, w);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return e.intersects(w); });
}

Hypergraph normalize(const Hypergraph& g) {
  // Sorting by size puts every potential subset before its supersets.
  std::vector<Edge> by_size = g.edges_;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Edge& a, const Edge& b) { return a.size() < b.size(); });
  std::vector<Edge> kept;
  for (Edge& e : by_size) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](const Edge& f) { return f.is_subset_of(e); });
    if (!redundant) kept.push_back(std::move(e));
  }
  // Restore the original relative order of surviving occurrences.
  std::vector<Edge> edges;
  edges.reserve(kept.size());
  std::vector<bool> used(kept.size(), false);
  for (const Edge& e : g.edges_) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (!used[i] && kept[i] == e) {
        used[i] = true;
        edges.push_back(e);
        break;
      }
    }
  }
  return Hypergraph(Hypergraph::Unchecked{}, g.vertices_, std::move(edges), g.mode_);
}

namespace {

void put_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

}  // namespace

std::string canonical_key(const Hypergraph& g) {
  const auto& ids = g.vertices().ids();
  std::vector<std::vector<std::uint32_t>> relabeled;
  relabeled.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    std::vector<std::uint32_t> r;
    r.reserve(e.size());
    for (VertexId v : e) {
      r.push_back(static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
    }
    relabeled.push_back(std::move(r));
  }
  std::sort(relabeled.begin(), relabeled.end());

  std::string key;
  put_varint(key, ids.size());
  put_varint(key, relabeled.size());
  for (const auto& e : relabeled) {
    put_varint(key, e.size());
    for (std::uint32_t v : e) put_varint(key, v);
  }
  key.push_back(g.mode() == Mode::Extended ? 'E' : 'S');
  return key;
}

Hypergraph with_mode(const Hypergraph& g, Mode mode) {
  return Hypergraph(g.vertices(), g.edges(), mode);
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  const VertexId offset = a.vertices().empty() ? 0 : a.vertices().back() + 1;
  std::vector<VertexId> ids = a.vertices().ids();
  for (VertexId v : b.vertices()) ids.push_back(v + offset);
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    std::vector<VertexId> shifted;
    for (VertexId v : e) shifted.push_back(v + offset);
    edges.push_back(VertexSet::from_sorted(std::move(shifted)));
  }
  const Mode mode = (a.mode() == Mode::Extended || b.mode() == Mode::Extended) ? Mode::Extended : Mode::Strict;
  return Hypergraph(VertexSet::from_sorted(std::move(ids)), std::move(edges), mode);
}

std::string to_string(const Hypergraph& g) {
  std::ostringstream os;
  auto put_set = [&os](const VertexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
  };
  os << '(';
  put_set(g.vertices());
  os << ", [";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i) os << ',';
    put_set(g.edges()[i]);
  }
  os << "]";
  if (g.mode() == Mode::Extended) os << ", extended";
  os << ')';
  return os.str();
}

}  // namespace indpoly
