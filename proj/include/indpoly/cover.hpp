#pragma once

#include <cstddef>

#include "indpoly/engine.hpp"

namespace indpoly {

struct CoverResult {
  UniPoly psi;
  std::size_t n = 0;
};

// Ψ(G, x) = x^{n(G)} · I(G, 1/x), with I from the configured engine.
CoverResult vertex_cover_poly(const Hypergraph& g, const EvalConfig& cfg = {});

// Reference Ψ used by the recurrence checks below unless another is given.
UniPoly oracle_psi(const Hypergraph& g);

// Ψ(G) = x·Ψ(G_{-v}) + Ψ(G_{†v}), or x·Ψ(G_{-v}) when {v} is an edge.
bool check_psi_vertex_recurrence(const Hypergraph& g, VertexId v, const PolyFn& psi = oracle_psi);

// The three edge forms:
//   Ψ(G_{-e}) - Ψ(G_{-e†e})  (or Ψ(G_{-e}) when some other f ⊆ e)
//   Σ_{∅⊂B⊆e} -(-x)^{|B|} Ψ(G_{-B})
//   Ψ(G_{-e}) - Ψ(G/e) + x·Ψ(G_{-e vertices})
// The first form is skipped for strict-mode loops, which it does not cover;
// the last needs |e| ≥ 1. True iff every applicable form holds.
bool check_psi_edge_recurrences(const Hypergraph& g, EdgeRef e, const PolyFn& psi = oracle_psi);

// Given I(G) = Σ a_i(x) I(G_i), checks Ψ(G) = Σ a_i(1/x) x^{n(G)-n(G_i)} Ψ(G_i).
// Both sides are scaled by a common power of x so that negative exponents
// never occur.
bool check_transfer_theorem(const Hypergraph& g, const Combination& decomposition,
                            const PolyFn& psi = oracle_psi);

}  // namespace indpoly
