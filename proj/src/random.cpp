#include "indpoly/random.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <utility>

namespace indpoly {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  // Largest multiple of bound representable in 64 bits, minus the remainder.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value > limit);
  return value % bound;
}

}  // namespace

Hypergraph random_hypergraph(const RandomSpec& spec) {
  if (spec.k_min > spec.k_max) throw Error(Errc::InvalidArgument, "k_min exceeds k_max");
  if (spec.k_max > spec.n) throw Error(Errc::InvalidArgument, "edge arity exceeds vertex count");
  if (spec.k_min == 0 && spec.mode == Mode::Strict) {
    throw Error(Errc::InvalidArgument, "arity 0 needs extended mode");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<VertexId> pool(spec.n);
  std::vector<Edge> edges;
  edges.reserve(spec.m);
  for (std::size_t j = 0; j < spec.m; ++j) {
    const std::size_t k = spec.k_min + draw(rng, spec.k_max - spec.k_min + 1);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + draw(rng, spec.n - i)]);
    }
    edges.emplace_back(std::vector<VertexId>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)));
  }
  std::vector<VertexId> ids(spec.n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return Hypergraph(VertexSet::from_sorted(std::move(ids)), std::move(edges), spec.mode);
}

HypergraphDocument random_document(const RandomSpec& spec) {
  std::string name = "random-n" + std::to_string(spec.n) + "-m" + std::to_string(spec.m) + "-k" +
                     std::to_string(spec.k_min) + "-" + std::to_string(spec.k_max) + "-s" + std::to_string(spec.seed);
  return to_document(random_hypergraph(spec), std::move(name));
}

}  // namespace indpoly
