#pragma once

#include <cstddef>
#include <cstdint>

#include "indpoly/document.hpp"
#include "indpoly/hypergraph.hpp"

namespace indpoly {

// Generator: std::mt19937_64 seeded with `seed`. A draw in [0, bound) takes
// raw 64-bit outputs and rejects those at or above the largest multiple of
// bound (2^64 - (2^64 mod bound)), then reduces mod bound. For each of the m
// edges, in order: draw the arity k_min + draw(k_max - k_min + 1), then pick
// the members by a partial Fisher-Yates shuffle of 0..n-1 (position i swaps
// with i + draw(n - i)), and sort them. Edges are drawn with replacement, so
// repeats are possible.
struct RandomSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k_min = 2;
  std::size_t k_max = 2;
  std::uint64_t seed = 0;
  Mode mode = Mode::Strict;
};

// Throws InvalidArgument if k_min > k_max, k_max > n, or k_min = 0 in
// strict mode.
Hypergraph random_hypergraph(const RandomSpec& spec);
HypergraphDocument random_document(const RandomSpec& spec);

}  // namespace indpoly
