#include "indpoly/cover.hpp"

#include <algorithm>

namespace indpoly {

CoverResult vertex_cover_poly(const Hypergraph& g, const EvalConfig& cfg) {
  const std::size_t n = g.num_vertices();
  return CoverResult{reciprocal_transform(eval(g, cfg).poly, n), n};
}

UniPoly oracle_psi(const Hypergraph& g) { return oracle::vertex_cover_poly_bf(g); }

bool check_psi_vertex_recurrence(const Hypergraph& g, VertexId v, const PolyFn& psi) {
  const VertexSet single{v};
  const UniPoly x = UniPoly::monomial(1, 1);
  UniPoly rhs = x * psi(delete_vertices(g, single));
  if (g.mode() == Mode::Extended || !g.has_loop_at(v)) rhs += psi(hide_vertices(g, single));
  return psi(g) == rhs;
}

bool check_psi_edge_recurrences(const Hypergraph& g, EdgeRef e, const PolyFn& psi) {
  const Edge target = g.edge(e);
  const UniPoly lhs = psi(g);
  const Hypergraph without = delete_edge(g, e);
  const bool extended = g.mode() == Mode::Extended;

  if (extended || target.size() > 1) {
    bool subedge = false;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (i != e.index && g.edges()[i].is_subset_of(target)) subedge = true;
    }
    UniPoly rhs = psi(without);
    if (extended || !subedge) rhs -= psi(hide_vertices(without, target));
    if (lhs != rhs) return false;
  }

  // -(-x)^{|B|} is +x^{|B|} for odd |B| and -x^{|B|} for even |B|.
  UniPoly ie;
  const std::uint64_t count = std::uint64_t{1} << target.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    std::vector<VertexId> picked;
    for (std::size_t i = 0; i < target.size(); ++i) {
      if ((mask >> i) & 1) picked.push_back(target[i]);
    }
    const std::size_t b = picked.size();
    ie += UniPoly::monomial(b % 2 == 1 ? 1 : -1, b) * psi(delete_vertices(g, VertexSet::from_sorted(picked)));
  }
  if (lhs != ie) return false;

  if (!target.empty()) {
    UniPoly rhs = psi(without) - psi(contract_edge(g, e));
    rhs += shift(psi(delete_vertices(g, target)), 1);
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_transfer_theorem(const Hypergraph& g, const Combination& decomposition, const PolyFn& psi) {
  const long n = static_cast<long>(g.num_vertices());
  // x^{top} · a_i(1/x) is a polynomial; x^{lift + n - n_i} is never negative.
  long top = 0;
  long lift = 0;
  for (const Term& t : decomposition) {
    top = std::max(top, t.coefficient.degree());
    lift = std::max(lift, static_cast<long>(t.child.num_vertices()) - n);
  }
  UniPoly rhs;
  for (const Term& t : decomposition) {
    const UniPoly reversed = reciprocal_transform(t.coefficient, static_cast<std::size_t>(top));
    const long power = lift + n - static_cast<long>(t.child.num_vertices());
    rhs += shift(reversed * psi(t.child), static_cast<std::size_t>(power));
  }
  const UniPoly lhs = shift(psi(g), static_cast<std::size_t>(top + lift));
  return lhs == rhs;
}

}  // namespace indpoly
