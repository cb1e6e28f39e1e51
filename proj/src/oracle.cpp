#include "indpoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace indpoly::oracle {

namespace {

using Mask = std::uint64_t;

// Bit i stands for the i-th smallest vertex id.
struct BitView {
  std::size_t n = 0;
  std::vector<Mask> edges;
};

Mask mask_of(const Hypergraph& g, const VertexSet& s) {
  const auto& ids = g.vertices().ids();
  Mask m = 0;
  for (VertexId v : s) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) {
      throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " is not in the hypergraph");
    }
    m |= Mask{1} << static_cast<unsigned>(it - ids.begin());
  }
  return m;
}

BitView bit_view(const Hypergraph& g, std::size_t bound) {
  if (g.num_vertices() > bound || g.num_vertices() >= 63) {
    throw Error(Errc::TooLarge, "oracle bound is " + std::to_string(bound) + " vertices, got " +
                                    std::to_string(g.num_vertices()));
  }
  BitView view;
  view.n = g.num_vertices();
  for (const Edge& e : g.edges()) view.edges.push_back(mask_of(g, e));
  return view;
}

bool independent(const BitView& view, Mask w) {
  return std::none_of(view.edges.begin(), view.edges.end(), [w](Mask e) { return (e & w) == e; });
}

bool covers(const BitView& view, Mask w) {
  return std::all_of(view.edges.begin(), view.edges.end(), [w](Mask e) { return (e & w) != 0; });
}

UniPoly from_counts(const std::vector<Integer>& counts) { return UniPoly(counts); }

}  // namespace

UniPoly independence_poly_bf(const Hypergraph& g, const Limits& limits) {
  const BitView view = bit_view(g, limits.max_vertices);
  std::vector<Integer> counts(view.n + 1);
  for (Mask w = 0; w < (Mask{1} << view.n); ++w) {
    if (independent(view, w)) ++counts[static_cast<std::size_t>(std::popcount(w))];
  }
  return from_counts(counts);
}

UniPoly restricted_independence_poly_bf(const Hypergraph& g, const RestrictionSpec& r,
                                        const Limits& limits) {
  const BitView view = bit_view(g, limits.max_vertices);
  const Mask include = mask_of(g, r.must_include);
  const Mask exclude = mask_of(g, r.must_exclude);
  std::vector<Integer> counts(view.n + 1);
  for (Mask w = 0; w < (Mask{1} << view.n); ++w) {
    if ((w & include) != include || (w & exclude) != 0) continue;
    if (independent(view, w)) ++counts[static_cast<std::size_t>(std::popcount(w))];
  }
  return from_counts(counts);
}

UniPoly vertex_cover_poly_bf(const Hypergraph& g, const Limits& limits) {
  const BitView view = bit_view(g, limits.max_vertices);
  std::vector<Integer> counts(view.n + 1);
  for (Mask w = 0; w < (Mask{1} << view.n); ++w) {
    if (covers(view, w)) ++counts[static_cast<std::size_t>(std::popcount(w))];
  }
  return from_counts(counts);
}

MultiPoly4 gscp_bf(const Hypergraph& g, const Limits& limits) {
  if (g.num_vertices() > limits.gscp_max_vertices || g.num_edges() > limits.gscp_max_edges) {
    throw Error(Errc::TooLarge, "subgraph enumeration bound exceeded");
  }
  const BitView view = bit_view(g, limits.gscp_max_vertices);
  MultiPoly4 out;
  std::vector<std::size_t> parent(view.n);
  for (Mask w = 0; w < (Mask{1} << view.n); ++w) {
    std::vector<Mask> inside;
    for (Mask e : view.edges) {
      if ((e & w) == e) inside.push_back(e);
    }
    const auto size_w = static_cast<std::uint32_t>(std::popcount(w));
    const auto induced = static_cast<std::uint32_t>(inside.size());
    for (Mask f = 0; f < (Mask{1} << inside.size()); ++f) {
      // Components of (W, F): union-find over the chosen occurrences.
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
      };
      for (std::size_t j = 0; j < inside.size(); ++j) {
        if (!((f >> j) & 1)) continue;
        const Mask e = inside[j];
        if (e == 0) continue;
        const std::size_t root = find(static_cast<std::size_t>(std::countr_zero(e)));
        for (std::size_t b = 0; b < view.n; ++b) {
          if ((e >> b) & 1) parent[find(b)] = root;
        }
      }
      std::uint32_t components = 0;
      for (std::size_t b = 0; b < view.n; ++b) {
        if (((w >> b) & 1) && find(b) == b) ++components;
      }
      const auto size_f = static_cast<std::uint32_t>(std::popcount(f));
      out.add_term({size_w, components, size_f, induced}, 1);
    }
  }
  return out;
}

Integer sigma_bf(const Hypergraph& g, const Limits& limits) {
  return evaluate(independence_poly_bf(g, limits), 1);
}

}  // namespace indpoly::oracle
