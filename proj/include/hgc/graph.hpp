#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hgc {

// Pattern / chunk width in bits.
inline constexpr unsigned kChunkBits = 32;

using NodeId = std::uint64_t;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr std::uint64_t chunks_per_row(std::uint64_t nodes) {
  return (nodes + kChunkBits - 1) / kChunkBits;
}

// Number of chunks Algorithm-1 style row chunking yields for a v x v matrix.
inline constexpr std::uint64_t chunk_count(std::uint64_t nodes) {
  return nodes * chunks_per_row(nodes);
}

// v x v bit matrix stored row-major as 32-bit words. Column j of a row lives
// in word j / 32 at bit 31 - (j % 32), so the words are exactly the chunks.
// Bits past column v - 1 in the last word of a row are always zero.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::uint64_t nodes);

  // Adopts pre-chunked words. Throws ContractError on a size mismatch and
  // OutOfRangeError if any padding bit is set.
  static AdjacencyMatrix from_words(std::uint64_t nodes, std::vector<std::uint32_t> words);

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool test(NodeId row, NodeId col) const;
  void set(NodeId row, NodeId col);

  std::span<const std::uint32_t> words() const noexcept { return words_; }
  std::span<const std::uint32_t> row_words(NodeId row) const;

  // Number of set bits.
  std::uint64_t edge_count() const;

  bool is_symmetric() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::uint64_t nodes_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint32_t> words_;
};

struct Chunk {
  std::uint32_t value = 0;
  std::uint64_t row = 0;
  std::uint64_t offset = 0;  // chunk index within the row

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// Builds the matrix from 0-indexed edges. Duplicate edges are idempotent and
// self loops are allowed. With `undirected`, (w, u) is set alongside (u, w).
// Throws ContractError for nodes == 0 and OutOfRangeError for any index >= nodes.
AdjacencyMatrix from_edge_list(std::span<const Edge> edges, std::uint64_t nodes, bool undirected);

// Rows in index order, each split into ceil(v / 32) chunks left to right.
std::vector<Chunk> chunk_rows(const AdjacencyMatrix& matrix);

// Inverse of chunk_rows: rebuilds the matrix from chunk values in order.
AdjacencyMatrix assemble_chunks(std::uint64_t nodes, std::span<const Chunk> chunks);

// Fraction of the v*v cells that are set. Throws ContractError when v == 0.
double density(const AdjacencyMatrix& matrix);

// Every set bit as (row, col), row-major.
std::vector<Edge> edges_of(const AdjacencyMatrix& matrix);

}  // namespace hgc
