#include "indpoly/engine.hpp"

namespace indpoly {

bool check_subdivision_identity(const Hypergraph& g, EdgeRef e, const EvalConfig& cfg) {
  const Edge target = g.edge(e);
  if (target.empty()) throw Error(Errc::EmptyEdgeSubdivision, "cannot subdivide an empty edge");
  const std::size_t k = target.size() - 1;
  const UniPoly lhs = independence_polynomial(g, cfg);
  UniPoly rhs = independence_polynomial(subdivide_edge(g, e), cfg);
  rhs -= shift(independence_polynomial(contract_edge(g, e), cfg), k);
  const UniPoly factor = UniPoly::monomial(1, k) - UniPoly::monomial(1, 1);
  rhs += factor * independence_polynomial(delete_vertices(g, target), cfg);
  return lhs == rhs;
}

bool check_sigma_identity(const Hypergraph& g, EdgeRef e, const EvalConfig& cfg) {
  auto sigma = [&](const Hypergraph& h) { return evaluate(independence_polynomial(h, cfg), 1); };
  return sigma(g) == sigma(subdivide_edge(g, e)) - sigma(contract_edge(g, e));
}

}  // namespace indpoly
