#pragma once

#include <cstdint>
#include <vector>

#include "indpoly/hypergraph.hpp"
#include "indpoly/random.hpp"

namespace indpoly::test {

inline Hypergraph make(std::initializer_list<VertexId> vertices, std::initializer_list<VertexSet> edges,
                       Mode mode = Mode::Strict) {
  return Hypergraph(VertexSet(vertices), std::vector<Edge>(edges), mode);
}

inline Hypergraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  Hypergraph base = Hypergraph::edgeless(n);
  return Hypergraph(base.vertices(), std::move(edges));
}

inline Hypergraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back(Edge{i, static_cast<VertexId>((i + 1) % n)});
  return Hypergraph(Hypergraph::edgeless(n).vertices(), std::move(edges));
}

// The 128 hypergraphs on {0,1,2} whose edges are distinct nonempty subsets.
inline std::vector<Hypergraph> all_three_vertex_hypergraphs(Mode mode = Mode::Strict) {
  std::vector<Edge> candidates;
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<VertexId> e;
    for (VertexId b = 0; b < 3; ++b) {
      if ((mask >> b) & 1) e.push_back(b);
    }
    candidates.emplace_back(std::move(e));
  }
  std::vector<Hypergraph> out;
  for (unsigned choice = 0; choice < 128; ++choice) {
    std::vector<Edge> edges;
    for (unsigned i = 0; i < 7; ++i) {
      if ((choice >> i) & 1) edges.push_back(candidates[i]);
    }
    out.emplace_back(Hypergraph::edgeless(3).vertices(), std::move(edges), mode);
  }
  return out;
}

// Every multiset of at most three edges on at most three vertices. The
// empty edge is a candidate in extended mode only.
inline std::vector<Hypergraph> small_multiset_family(Mode mode) {
  std::vector<Hypergraph> out;
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<Edge> candidates;
    if (mode == Mode::Extended) candidates.push_back(Edge{});
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> e;
      for (VertexId b = 0; b < n; ++b) {
        if ((mask >> b) & 1) e.push_back(b);
      }
      candidates.emplace_back(std::move(e));
    }
    const std::size_t c = candidates.size();
    std::vector<std::vector<std::size_t>> picks{{}};
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& p : picks) {
        if (p.size() != m - 1) continue;
        for (std::size_t i = p.empty() ? 0 : p.back(); i < c; ++i) {
          auto q = p;
          q.push_back(i);
          next.push_back(std::move(q));
        }
      }
      picks.insert(picks.end(), next.begin(), next.end());
    }
    for (const auto& p : picks) {
      if (c == 0 && !p.empty()) continue;
      std::vector<Edge> edges;
      for (std::size_t i : p) edges.push_back(candidates[i]);
      out.emplace_back(Hypergraph::edgeless(n).vertices(), std::move(edges), mode);
    }
  }
  return out;
}

// Every simple graph on {0..n-1}.
inline std::vector<Hypergraph> all_simple_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.push_back(Edge{a, b});
  }
  std::vector<Hypergraph> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << pairs.size()); ++choice) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((choice >> i) & 1) edges.push_back(pairs[i]);
    }
    out.emplace_back(Hypergraph::edgeless(n).vertices(), std::move(edges));
  }
  return out;
}

// Mixed-arity random instances: loops, repeated edges, and in extended mode
// occasionally empty edges. Deterministic in `seed`.
inline Hypergraph random_instance(std::uint64_t seed, std::size_t max_n, Mode mode = Mode::Strict) {
  const std::size_t n = 1 + seed % max_n;
  const std::size_t m = (seed / 7) % (n + 6);
  RandomSpec spec;
  spec.n = n;
  spec.m = m;
  spec.k_min = (mode == Mode::Extended && seed % 5 == 0) ? 0 : 1;
  spec.k_max = std::min<std::size_t>(n, 1 + (seed / 3) % 4);
  if (spec.k_max < spec.k_min) spec.k_max = spec.k_min;
  spec.seed = seed * 0x9e3779b97f4a7c15ULL + 1;
  spec.mode = mode;
  return random_hypergraph(spec);
}

}  // namespace indpoly::test
