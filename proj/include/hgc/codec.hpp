#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/patterns.hpp"

namespace hgc {

// Token widths: flag bit, group bit, identifier; or flag bit + raw chunk.
inline constexpr unsigned kHighTokenBits = 2 + kHighIdBits;  // 4
inline constexpr unsigned kLowTokenBits = 2 + kLowIdBits;    // 5
inline constexpr unsigned kMissTokenBits = 1 + kChunkBits;   // 33

struct CompressedGraph {
  std::uint64_t nodes = 0;
  PatternDictionary dict;
  std::vector<std::uint8_t> body;  // MSB-first token stream, zero padded
  std::uint64_t body_bits = 0;

  friend bool operator==(const CompressedGraph&, const CompressedGraph&) = default;
};

// Replaces every chunk, in row-major order, by a 4-bit high token, a 5-bit
// low token or a 33-bit miss token. `counts`, when given, receives m_h, m_l
// and the chunk total.
CompressedGraph compress(const AdjacencyMatrix& matrix, const PatternDictionary& dict,
                         MatchCounts* counts = nullptr);

// Compresses against the matrix's own top-12 chunk values.
CompressedGraph compress_adaptive(const AdjacencyMatrix& matrix, MatchCounts* counts = nullptr);

// Throws CorruptContainerError on a truncated body, an identifier past the end
// of its group, nonzero bits in row padding, or any bit left over after the
// last chunk (including nonzero padding in the final byte).
AdjacencyMatrix decompress(const CompressedGraph& compressed);

// Container layout, integers little-endian:
//   "HGC1" | version u8 = 1 | nodes u64 | h u8 | l u8 | h+l patterns (u32 BE)
//   | body_bits u64 | body | crc32 u32 over every preceding byte
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerFixedBytes = 4 + 1 + 8 + 1 + 1 + 8;
inline constexpr std::size_t kContainerTrailerBytes = 4;

std::vector<std::uint8_t> write_container(const CompressedGraph& compressed);

// Throws CorruptContainerError on bad magic, unsupported version, an invalid
// dictionary, a length mismatch, a checksum mismatch, or a body_bits value
// no token stream for `nodes` could have.
CompressedGraph read_container(std::span<const std::uint8_t> bytes);

void save_container(const std::filesystem::path& path, const CompressedGraph& compressed);
CompressedGraph load_container(const std::filesystem::path& path);

}  // namespace hgc
