#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "indpoly/hypergraph.hpp"
#include "indpoly/multipoly.hpp"
#include "indpoly/oracle.hpp"
#include "indpoly/unipoly.hpp"

namespace indpoly {

enum class EngineKind { VertexRecurrence, EdgeRecurrence, EdgeInclusionExclusion, EdgeContraction, Oracle };
enum class PivotStrategy { MaxDegreeVertex, MinVertexId, SmallestEdge, FirstEdge };

inline constexpr EngineKind all_engines[] = {EngineKind::VertexRecurrence, EngineKind::EdgeRecurrence,
                                             EngineKind::EdgeInclusionExclusion, EngineKind::EdgeContraction,
                                             EngineKind::Oracle};
inline constexpr PivotStrategy all_pivots[] = {PivotStrategy::MaxDegreeVertex, PivotStrategy::MinVertexId,
                                               PivotStrategy::SmallestEdge, PivotStrategy::FirstEdge};

std::string_view engine_name(EngineKind kind);
std::string_view pivot_name(PivotStrategy pivot);
std::optional<EngineKind> parse_engine(std::string_view name);
std::optional<PivotStrategy> parse_pivot(std::string_view name);

struct EvalConfig {
  EngineKind engine = EngineKind::VertexRecurrence;
  PivotStrategy pivot = PivotStrategy::MaxDegreeVertex;
  bool memoize = true;
  bool split_components = true;
  std::size_t recursion_limit = 1'000'000;
  oracle::Limits oracle_limits{};
};

struct ComputationReport {
  UniPoly poly;
  std::uint64_t nodes_visited = 0;
  std::uint64_t cache_hits = 0;
  std::size_t max_depth = 0;
  std::chrono::nanoseconds elapsed{0};
};

// One summand a_i(x) · I(G_i, x) of a recurrence step.
struct Term {
  UniPoly coefficient;
  Hypergraph child;
};
using Combination = std::vector<Term>;

using PolyFn = std::function<UniPoly(const Hypergraph&)>;

// Σ a_i(x) · f(G_i).
UniPoly combine(const Combination& terms, const PolyFn& f);

// ---------------------------------------------------------------------------
// Single recurrence steps. Each returns the children and multipliers of one
// application; in extended mode no case distinction is made.

// I(G) = I(G_{-v}) + x·I(G_{†v}); only the first term if {v} is an edge.
Combination step_vertex(const Hypergraph& g, VertexId v);
// I(G) = I(G_{-e}) - x^|e|·I(G_{-e†e}); only the first term if another
// occurrence f ⊆ e exists. Strict mode rejects loops.
Combination step_edge(const Hypergraph& g, EdgeRef e);
// I(G) = Σ_{∅⊂W⊆e} (-1)^{|W|+1} I(G_{-W}).
Combination step_edge_ie(const Hypergraph& g, EdgeRef e);
// I(G) = I(G_{-e}) - x^{|e|-1}·I(G_{/e}) + x^{|e|-1}·I(G_{-e vertices}).
Combination step_edge_contract(const Hypergraph& g, EdgeRef e);
// I(G) = Σ_{W⊆U independent} x^|W|·I(G_{†W -(U∖W)}). Extended mode sums over
// every W ⊆ U.
Combination expand_vertex_subset(const Hypergraph& g, const VertexSet& u);
// I(G) = I(G_{-U}) + Σ_{∅⊂W⊆U independent} (-1)^{|W|+1} x^|W|·I(G_{†W}).
Combination expand_vertex_subset_ie(const Hypergraph& g, const VertexSet& u);

using Pivot = std::variant<VertexId, EdgeRef>;

// MaxDegreeVertex and MinVertexId yield a vertex, SmallestEdge and FirstEdge
// an edge occurrence. Throws NoPivotAvailable if there is nothing to pick.
Pivot choose_pivot(const Hypergraph& g, PivotStrategy s);

// Exact independence polynomial. Every engine and pivot strategy produces
// the same polynomial.
ComputationReport eval(const Hypergraph& g, const EvalConfig& cfg = {});
UniPoly independence_polynomial(const Hypergraph& g, const EvalConfig& cfg = {});

// ---------------------------------------------------------------------------
// Generalized subgraph counting polynomial by edge recurrence.

struct GscpLimits {
  std::size_t max_edges = 16;
  std::size_t max_edge_size = 10;
};

MultiPoly4 gscp_eval(const Hypergraph& g, const GscpLimits& limits = {});

// ---------------------------------------------------------------------------
// Identity checks, each evaluated with the configured engine.

// I(G) = I(G÷e) - x^{|e|-1}·I(G/e) + (x^{|e|-1} - x)·I(G_{-e vertices}).
bool check_subdivision_identity(const Hypergraph& g, EdgeRef e, const EvalConfig& cfg = {});
// σ(G) = σ(G÷e) - σ(G/e).
bool check_sigma_identity(const Hypergraph& g, EdgeRef e, const EvalConfig& cfg = {});

}  // namespace indpoly
