#pragma once

#include <cstdint>
#include <random>

#include "hgc/graph.hpp"

namespace hgc::synth {

// All generators draw from std::mt19937_64 (its output sequence is fixed by
// the C++ standard) through the helpers below, which avoid the
// implementation-defined std distributions. Same arguments, same matrix, on
// every platform.
using Engine = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
double uniform01(Engine& rng);
// Uniform in [0, bound), unbiased (Lemire's multiply-and-reject). bound > 0.
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound);

// G(v, p): every unordered pair (undirected) or ordered pair (directed) of
// distinct nodes gets an edge independently with probability p. No self loops.
// Throws ContractError for p outside [0, 1] or v == 0.
AdjacencyMatrix gen_erdos_renyi(std::uint64_t nodes, double p, std::uint64_t seed, bool undirected);

// Preferential attachment. Nodes arrive in index order; node i links to
// min(ceil(edges_target / v), i) distinct earlier nodes, each drawn with
// probability proportional to (degree + 1). Directed output keeps only the
// new -> old direction. Throws ContractError if edges_target > v(v-1)/2.
AdjacencyMatrix gen_power_law(std::uint64_t nodes, std::uint64_t edges_target, std::uint64_t seed,
                              bool undirected);

}  // namespace hgc::synth
