#include "hgc/graph.hpp"

#include <bit>
#include <limits>
#include <string>

#include "hgc/error.hpp"
#include "hgc/kernels.hpp"

namespace hgc {
namespace {

constexpr std::uint32_t bit_for(NodeId col) {
  return std::uint32_t{1} << (kChunkBits - 1 - (col % kChunkBits));
}

// Mask of valid column bits in the last word of each row.
std::uint32_t last_word_mask(std::uint64_t nodes) {
  const unsigned tail = static_cast<unsigned>(nodes % kChunkBits);
  return tail == 0 ? 0xFFFFFFFFu : ~(0xFFFFFFFFu >> tail);
}

std::size_t checked_word_count(std::uint64_t nodes) {
  const std::uint64_t per_row = chunks_per_row(nodes);
  if (per_row != 0 && nodes > std::numeric_limits<std::size_t>::max() / per_row) {
    throw OutOfRangeError("matrix with " + std::to_string(nodes) + " nodes is too large");
  }
  return static_cast<std::size_t>(nodes * per_row);
}

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(std::uint64_t nodes)
    : nodes_(nodes),
      words_per_row_(static_cast<std::size_t>(chunks_per_row(nodes))),
      words_(checked_word_count(nodes), 0u) {}

AdjacencyMatrix AdjacencyMatrix::from_words(std::uint64_t nodes, std::vector<std::uint32_t> words) {
  if (words.size() != checked_word_count(nodes)) {
    throw ContractError("from_words: expected " + std::to_string(chunk_count(nodes)) + " words, got " +
                        std::to_string(words.size()));
  }
  AdjacencyMatrix m;
  m.nodes_ = nodes;
  m.words_per_row_ = static_cast<std::size_t>(chunks_per_row(nodes));
  const std::uint32_t mask = last_word_mask(nodes);
  if (mask != 0xFFFFFFFFu) {
    for (std::size_t r = 0; r < nodes; ++r) {
      if (words[(r + 1) * m.words_per_row_ - 1] & ~mask) {
        throw OutOfRangeError("from_words: padding bits set in row " + std::to_string(r));
      }
    }
  }
  m.words_ = std::move(words);
  return m;
}

bool AdjacencyMatrix::test(NodeId row, NodeId col) const {
  if (row >= nodes_ || col >= nodes_) {
    throw OutOfRangeError("test: cell (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
  }
  return (words_[row * words_per_row_ + col / kChunkBits] & bit_for(col)) != 0;
}

void AdjacencyMatrix::set(NodeId row, NodeId col) {
  if (row >= nodes_ || col >= nodes_) {
    throw OutOfRangeError("set: cell (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
  }
  words_[row * words_per_row_ + col / kChunkBits] |= bit_for(col);
}

std::span<const std::uint32_t> AdjacencyMatrix::row_words(NodeId row) const {
  if (row >= nodes_) throw OutOfRangeError("row_words: row out of range");
  return std::span<const std::uint32_t>(words_).subspan(row * words_per_row_, words_per_row_);
}

std::uint64_t AdjacencyMatrix::edge_count() const { return kernels::active().popcount(words_); }

bool AdjacencyMatrix::is_symmetric() const {
  for (NodeId r = 0; r < nodes_; ++r) {
    for (NodeId c = r + 1; c < nodes_; ++c) {
      if (test(r, c) != test(c, r)) return false;
    }
  }
  return true;
}

AdjacencyMatrix from_edge_list(std::span<const Edge> edges, std::uint64_t nodes, bool undirected) {
  if (nodes == 0) throw ContractError("from_edge_list: node count must be at least 1");
  AdjacencyMatrix m(nodes);
  for (const auto& [u, w] : edges) {
    if (u >= nodes || w >= nodes) {
      throw OutOfRangeError("edge (" + std::to_string(u) + "," + std::to_string(w) + ") outside " +
                            std::to_string(nodes) + " nodes");
    }
    m.set(u, w);
    if (undirected) m.set(w, u);
  }
  return m;
}

std::vector<Chunk> chunk_rows(const AdjacencyMatrix& matrix) {
  std::vector<Chunk> out;
  out.reserve(matrix.words().size());
  const std::size_t per_row = matrix.words_per_row();
  for (std::uint64_t r = 0; r < matrix.nodes(); ++r) {
    const auto row = matrix.row_words(r);
    for (std::size_t k = 0; k < per_row; ++k) out.push_back(Chunk{row[k], r, k});
  }
  return out;
}

AdjacencyMatrix assemble_chunks(std::uint64_t nodes, std::span<const Chunk> chunks) {
  std::vector<std::uint32_t> words;
  words.reserve(chunks.size());
  for (const Chunk& c : chunks) words.push_back(c.value);
  return AdjacencyMatrix::from_words(nodes, std::move(words));
}

double density(const AdjacencyMatrix& matrix) {
  if (matrix.nodes() == 0) throw ContractError("density: empty matrix");
  const double cells = static_cast<double>(matrix.nodes()) * static_cast<double>(matrix.nodes());
  return static_cast<double>(matrix.edge_count()) / cells;
}

std::vector<Edge> edges_of(const AdjacencyMatrix& matrix) {
  std::vector<Edge> out;
  const std::size_t per_row = matrix.words_per_row();
  for (NodeId r = 0; r < matrix.nodes(); ++r) {
    const auto row = matrix.row_words(r);
    for (std::size_t k = 0; k < per_row; ++k) {
      std::uint32_t w = row[k];
      while (w != 0) {
        const int lead = std::countl_zero(w);
        out.emplace_back(r, k * kChunkBits + static_cast<NodeId>(lead));
        w &= ~(0x80000000u >> lead);
      }
    }
  }
  return out;
}

}  // namespace hgc
