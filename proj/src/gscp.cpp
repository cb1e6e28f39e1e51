#include <string>
#include <unordered_map>

#include "indpoly/engine.hpp"

namespace indpoly {

namespace {

class GscpEvaluator {
 public:
  explicit GscpEvaluator(const GscpLimits& limits) : limits_(limits) {}

  MultiPoly4 solve(const Hypergraph& g) {
    if (g.num_edges() == 0) return pow(one_plus_vx(), g.num_vertices());

    std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    MultiPoly4 result;
    const auto components = connected_components(g);
    if (!g.has_empty_edge() && components.size() > 1) {
      result = MultiPoly4::constant(1);
      for (const VertexSet& c : components) result = result * solve(induced_subgraph(g, c));
    } else {
      result = solve_edge(g);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static MultiPoly4 one_plus_vx() {
    return MultiPoly4::constant(1) + MultiPoly4::monomial(1, {1, 1, 0, 0});
  }

  MultiPoly4 solve_edge(const Hypergraph& g) {
    const MultiPoly4 z = MultiPoly4::variable(Var::Z);

    // An empty edge lies inside every W and joins nothing, so it
    // contributes z·(1 + y) to every subgraph.
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (g.edges()[i].empty()) {
        const MultiPoly4 factor = z * (MultiPoly4::constant(1) + MultiPoly4::variable(Var::Y));
        return factor * solve(delete_edge(g, EdgeRef{i}));
      }
    }

    const EdgeRef e = std::get<EdgeRef>(choose_pivot(g, PivotStrategy::SmallestEdge));
    const Edge target = g.edge(e);
    if (target.size() > limits_.max_edge_size) {
      throw Error(Errc::TooLarge, "edge too large for the subgraph recurrence");
    }
    const auto k = static_cast<std::uint32_t>(target.size() - 1);
    const MultiPoly4 vyz = MultiPoly4::monomial(1, {k, 0, 1, 1});

    MultiPoly4 result = z * solve(delete_edge(g, e));
    result += vyz * (solve(contract_edge(g, e)) - solve(delete_vertices(g, target)));

    MultiPoly4 alternating;
    const std::uint64_t count = std::uint64_t{1} << target.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      std::vector<VertexId> picked;
      for (std::size_t i = 0; i < target.size(); ++i) {
        if ((mask >> i) & 1) picked.push_back(target[i]);
      }
      MultiPoly4 term = solve(delete_vertices(g, VertexSet::from_sorted(picked)));
      if (picked.size() % 2 == 1) {
        alternating -= term;
      } else {
        alternating += term;
      }
    }
    result += (z - MultiPoly4::constant(1)) * alternating;
    return result;
  }

  const GscpLimits& limits_;
  std::unordered_map<std::string, MultiPoly4> memo_;
};

}  // namespace

MultiPoly4 gscp_eval(const Hypergraph& g, const GscpLimits& limits) {
  if (g.num_edges() > limits.max_edges) {
    throw Error(Errc::TooLarge, "subgraph recurrence bound is " + std::to_string(limits.max_edges) + " edges");
  }
  GscpEvaluator evaluator(limits);
  return evaluator.solve(g);
}

}  // namespace indpoly
