#include "indpoly/engine.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace indpoly {

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::VertexRecurrence: return "vertex";
    case EngineKind::EdgeRecurrence: return "edge";
    case EngineKind::EdgeInclusionExclusion: return "edge-ie";
    case EngineKind::EdgeContraction: return "edge-contract";
    case EngineKind::Oracle: return "oracle";
  }
  return "?";
}

std::string_view pivot_name(PivotStrategy pivot) {
  switch (pivot) {
    case PivotStrategy::MaxDegreeVertex: return "max-degree";
    case PivotStrategy::MinVertexId: return "min-id";
    case PivotStrategy::SmallestEdge: return "smallest-edge";
    case PivotStrategy::FirstEdge: return "first-edge";
  }
  return "?";
}

std::optional<EngineKind> parse_engine(std::string_view name) {
  for (EngineKind k : all_engines) {
    if (engine_name(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<PivotStrategy> parse_pivot(std::string_view name) {
  for (PivotStrategy p : all_pivots) {
    if (pivot_name(p) == name) return p;
  }
  return std::nullopt;
}

UniPoly combine(const Combination& terms, const PolyFn& f) {
  UniPoly sum;
  for (const Term& t : terms) sum += t.coefficient * f(t.child);
  return sum;
}

// ---------------------------------------------------------------------------
// Steps

namespace {

UniPoly signed_monomial(bool negative, std::size_t degree) {
  return UniPoly::monomial(negative ? -1 : 1, degree);
}

// Subsets of `u` in increasing binary-counter order over the sorted members.
template <typename Fn>
void for_each_subset(const VertexSet& u, Fn&& fn) {
  if (u.size() > 24) throw Error(Errc::TooLarge, "vertex subset expansion limited to 24 vertices");
  const std::uint64_t count = std::uint64_t{1} << u.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<VertexId> picked;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if ((mask >> i) & 1) picked.push_back(u[i]);
    }
    fn(VertexSet::from_sorted(std::move(picked)));
  }
}

bool has_other_subedge(const Hypergraph& g, EdgeRef e) {
  const Edge& target = g.edge(e);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i != e.index && g.edges()[i].is_subset_of(target)) return true;
  }
  return false;
}

}  // namespace

Combination step_vertex(const Hypergraph& g, VertexId v) {
  const VertexSet single{v};
  Combination out;
  out.push_back({UniPoly::constant(1), delete_vertices(g, single)});
  if (g.mode() == Mode::Extended || !g.has_loop_at(v)) {
    out.push_back({UniPoly::monomial(1, 1), hide_vertices(g, single)});
  }
  return out;
}

Combination step_edge(const Hypergraph& g, EdgeRef e) {
  const Edge target = g.edge(e);
  const bool extended = g.mode() == Mode::Extended;
  if (!extended && target.size() == 1) {
    throw Error(Errc::LoopNotSupported, "edge recurrence needs |e| > 1 in strict mode");
  }
  Hypergraph without = delete_edge(g, e);
  Combination out;
  if (!extended && has_other_subedge(g, e)) {
    out.push_back({UniPoly::constant(1), std::move(without)});
    return out;
  }
  Hypergraph hidden = hide_vertices(without, target);
  out.push_back({UniPoly::constant(1), std::move(without)});
  out.push_back({signed_monomial(true, target.size()), std::move(hidden)});
  return out;
}

Combination step_edge_ie(const Hypergraph& g, EdgeRef e) {
  const Edge target = g.edge(e);
  Combination out;
  for_each_subset(target, [&](const VertexSet& w) {
    if (w.empty()) return;
    out.push_back({UniPoly::constant(w.size() % 2 == 1 ? 1 : -1), delete_vertices(g, w)});
  });
  return out;
}

Combination step_edge_contract(const Hypergraph& g, EdgeRef e) {
  const Edge target = g.edge(e);
  if (target.empty()) throw Error(Errc::EmptyEdgeContraction, "cannot contract an empty edge");
  const std::size_t k = target.size() - 1;
  Combination out;
  out.push_back({UniPoly::constant(1), delete_edge(g, e)});
  out.push_back({signed_monomial(true, k), contract_edge(g, e)});
  out.push_back({signed_monomial(false, k), delete_vertices(g, target)});
  return out;
}

Combination expand_vertex_subset(const Hypergraph& g, const VertexSet& u) {
  if (!u.is_subset_of(g.vertices())) throw Error(Errc::UnknownVertex, "subset is not inside the vertex set");
  const bool extended = g.mode() == Mode::Extended;
  Combination out;
  for_each_subset(u, [&](const VertexSet& w) {
    if (!extended && !is_independent(g, w)) return;
    out.push_back({UniPoly::monomial(1, w.size()), delete_vertices(hide_vertices(g, w), set_difference(u, w))});
  });
  return out;
}

Combination expand_vertex_subset_ie(const Hypergraph& g, const VertexSet& u) {
  if (!u.is_subset_of(g.vertices())) throw Error(Errc::UnknownVertex, "subset is not inside the vertex set");
  Combination out;
  out.push_back({UniPoly::constant(1), delete_vertices(g, u)});
  for_each_subset(u, [&](const VertexSet& w) {
    if (w.empty() || !is_independent(g, w)) return;
    out.push_back({signed_monomial(w.size() % 2 == 0, w.size()), hide_vertices(g, w)});
  });
  return out;
}

// ---------------------------------------------------------------------------
// Pivots

namespace {

std::vector<std::size_t> degrees(const Hypergraph& g) {
  const auto& ids = g.vertices().ids();
  std::vector<std::size_t> deg(ids.size(), 0);
  for (const Edge& e : g.edges()) {
    for (VertexId v : e) {
      ++deg[static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin())];
    }
  }
  return deg;
}

VertexId max_degree_vertex(const Hypergraph& g) {
  const auto deg = degrees(g);
  // max_element keeps the first maximum, i.e. the smallest id.
  const auto best = std::max_element(deg.begin(), deg.end());
  return g.vertices()[static_cast<std::size_t>(best - deg.begin())];
}

bool smaller_edge(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

EdgeRef smallest_edge_where(const Hypergraph& g, const std::function<bool(const Edge&)>& admit) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (!admit(e)) continue;
    if (!best || smaller_edge(e, g.edges()[*best])) best = i;
  }
  if (!best) throw Error(Errc::NoPivotAvailable, "no admissible edge");
  return EdgeRef{*best};
}

}  // namespace

Pivot choose_pivot(const Hypergraph& g, PivotStrategy s) {
  switch (s) {
    case PivotStrategy::MaxDegreeVertex:
    case PivotStrategy::MinVertexId:
      if (g.num_vertices() == 0) throw Error(Errc::NoPivotAvailable, "hypergraph has no vertices");
      return s == PivotStrategy::MinVertexId ? g.vertices().front() : max_degree_vertex(g);
    case PivotStrategy::SmallestEdge:
      if (g.num_edges() == 0) throw Error(Errc::NoPivotAvailable, "hypergraph has no edges");
      return smallest_edge_where(g, [](const Edge&) { return true; });
    case PivotStrategy::FirstEdge:
      if (g.num_edges() == 0) throw Error(Errc::NoPivotAvailable, "hypergraph has no edges");
      return EdgeRef{0};
  }
  throw Error(Errc::InvalidArgument, "unknown pivot strategy");
}

namespace {

// The engines only pivot on hypergraphs with at least one nonempty edge.
// Vertex engines given an edge strategy branch on the smallest vertex of the
// chosen edge; edge engines given a vertex strategy branch on the smallest
// edge through the chosen vertex. MinVertexId skips isolated vertices, which
// the edgeless base case absorbs.
VertexId engine_vertex(const Hypergraph& g, PivotStrategy s) {
  switch (s) {
    case PivotStrategy::MaxDegreeVertex:
      return max_degree_vertex(g);
    case PivotStrategy::MinVertexId: {
      VertexId best = g.edges().front().front();
      for (const Edge& e : g.edges()) best = std::min(best, e.front());
      return best;
    }
    case PivotStrategy::SmallestEdge:
    case PivotStrategy::FirstEdge:
      return g.edge(std::get<EdgeRef>(choose_pivot(g, s))).front();
  }
  throw Error(Errc::InvalidArgument, "unknown pivot strategy");
}

EdgeRef engine_edge(const Hypergraph& g, PivotStrategy s) {
  switch (s) {
    case PivotStrategy::MaxDegreeVertex: {
      const VertexId v = max_degree_vertex(g);
      return smallest_edge_where(g, [v](const Edge& e) { return e.contains(v); });
    }
    case PivotStrategy::MinVertexId: {
      const VertexId v = engine_vertex(g, s);
      for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (g.edges()[i].contains(v)) return EdgeRef{i};
      }
      throw Error(Errc::NoPivotAvailable, "no edge through the chosen vertex");
    }
    case PivotStrategy::SmallestEdge:
    case PivotStrategy::FirstEdge:
      return std::get<EdgeRef>(choose_pivot(g, s));
  }
  throw Error(Errc::InvalidArgument, "unknown pivot strategy");
}

class Evaluator {
 public:
  Evaluator(const EvalConfig& cfg, ComputationReport& report) : cfg_(cfg), report_(report) {}

  UniPoly solve(const Hypergraph& g, std::size_t depth) {
    ++report_.nodes_visited;
    if (depth > cfg_.recursion_limit) {
      throw Error(Errc::RecursionLimitExceeded, "recursion depth " + std::to_string(depth) + " exceeds limit");
    }
    report_.max_depth = std::max(report_.max_depth, depth);
    if (g.has_empty_edge()) return {};
    if (g.num_edges() == 0) return UniPoly::one_plus_x_pow(g.num_vertices());

    std::string key;
    if (cfg_.memoize) {
      key = canonical_key(g);
      if (auto it = memo_.find(key); it != memo_.end()) {
        ++report_.cache_hits;
        return it->second;
      }
    }

    UniPoly result = cfg_.split_components ? solve_split(g, depth) : solve_step(g, depth);
    if (cfg_.memoize) memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  UniPoly solve_split(const Hypergraph& g, std::size_t depth) {
    const auto components = connected_components(g);
    if (components.size() == 1) return solve_step(g, depth);
    UniPoly product = UniPoly::constant(1);
    std::size_t isolated = 0;
    for (const VertexSet& c : components) {
      if (c.size() == 1 && g.degree(c.front()) == 0) {
        ++isolated;
        continue;
      }
      product *= solve(induced_subgraph(g, c), depth + 1);
      if (product.is_zero()) return product;
    }
    return product * UniPoly::one_plus_x_pow(isolated);
  }

  UniPoly solve_step(const Hypergraph& g, std::size_t depth) {
    Combination terms;
    switch (cfg_.engine) {
      case EngineKind::Oracle:
        return oracle::independence_poly_bf(g, cfg_.oracle_limits);
      case EngineKind::VertexRecurrence:
        terms = step_vertex(g, engine_vertex(g, cfg_.pivot));
        break;
      case EngineKind::EdgeRecurrence: {
        const EdgeRef e = engine_edge(g, cfg_.pivot);
        const Edge& edge = g.edge(e);
        // Strict-mode loops fall outside the edge rule; branch on the vertex.
        terms = (edge.size() == 1 && g.mode() == Mode::Strict) ? step_vertex(g, edge.front()) : step_edge(g, e);
        break;
      }
      case EngineKind::EdgeInclusionExclusion:
        terms = step_edge_ie(g, engine_edge(g, cfg_.pivot));
        break;
      case EngineKind::EdgeContraction:
        terms = step_edge_contract(g, engine_edge(g, cfg_.pivot));
        break;
    }
    return combine(terms, [&](const Hypergraph& child) { return solve(child, depth + 1); });
  }

  const EvalConfig& cfg_;
  ComputationReport& report_;
  std::unordered_map<std::string, UniPoly> memo_;
};

}  // namespace

ComputationReport eval(const Hypergraph& g, const EvalConfig& cfg) {
  ComputationReport report;
  const auto start = std::chrono::steady_clock::now();
  if (cfg.engine == EngineKind::Oracle) {
    report.nodes_visited = 1;
    report.poly = oracle::independence_poly_bf(g, cfg.oracle_limits);
  } else {
    Evaluator evaluator(cfg, report);
    report.poly = evaluator.solve(g, 0);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

UniPoly independence_polynomial(const Hypergraph& g, const EvalConfig& cfg) { return eval(g, cfg).poly; }

}  // namespace indpoly
