#pragma once

// Test-only helpers: seeded random matrices and a reference token encoder
// that works from the token definitions on strings of '0'/'1'.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/patterns.hpp"

namespace hgc::testing {

inline AdjacencyMatrix random_matrix(std::uint64_t nodes, double density, std::uint64_t seed,
                                     bool undirected = false) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  AdjacencyMatrix m(nodes);
  for (NodeId r = 0; r < nodes; ++r) {
    for (NodeId c = undirected ? r : 0; c < nodes; ++c) {
      if (coin(rng)) {
        m.set(r, c);
        if (undirected) m.set(c, r);
      }
    }
  }
  return m;
}

inline std::string bits_of(std::uint64_t value, unsigned width) {
  std::string s;
  for (unsigned i = width; i-- > 0;) s.push_back(((value >> i) & 1) ? '1' : '0');
  return s;
}

// Chunk value built cell by cell from test(): column j at bit 31 - (j % 32).
inline std::uint32_t reference_chunk(const AdjacencyMatrix& m, NodeId row, std::uint64_t offset) {
  std::uint32_t value = 0;
  for (unsigned b = 0; b < 32; ++b) {
    const NodeId col = offset * 32 + b;
    if (col < m.nodes() && m.test(row, col)) value |= 1u << (31 - b);
  }
  return value;
}

inline std::string reference_encode(const AdjacencyMatrix& m, const PatternDictionary& dict) {
  std::string out;
  const std::uint64_t per_row = (m.nodes() + 31) / 32;
  for (NodeId r = 0; r < m.nodes(); ++r) {
    for (std::uint64_t k = 0; k < per_row; ++k) {
      const std::uint32_t chunk = reference_chunk(m, r, k);
      bool done = false;
      for (std::size_t i = 0; i < dict.high().size() && !done; ++i) {
        if (dict.high()[i] == chunk) {
          out += "10" + bits_of(i, 2);
          done = true;
        }
      }
      for (std::size_t j = 0; j < dict.low().size() && !done; ++j) {
        if (dict.low()[j] == chunk) {
          out += "11" + bits_of(j, 3);
          done = true;
        }
      }
      if (!done) out += "0" + bits_of(chunk, 32);
    }
  }
  return out;
}

inline std::string unpack_bits(const std::vector<std::uint8_t>& bytes, std::uint64_t bit_len) {
  std::string s;
  for (std::uint64_t i = 0; i < bit_len; ++i) s.push_back(((bytes[i / 8] >> (7 - i % 8)) & 1) ? '1' : '0');
  return s;
}

}  // namespace hgc::testing
