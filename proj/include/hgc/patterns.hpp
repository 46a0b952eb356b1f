#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/kernels.hpp"

namespace hgc {

inline constexpr std::size_t kHighCapacity = 4;
inline constexpr std::size_t kLowCapacity = 8;
inline constexpr unsigned kHighIdBits = 2;
inline constexpr unsigned kLowIdBits = 3;

struct ChunkHistogram {
  std::unordered_map<std::uint32_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t count_of(std::uint32_t value) const {
    const auto it = counts.find(value);
    return it == counts.end() ? 0 : it->second;
  }

  void merge(const ChunkHistogram& other);

  // (value, count) pairs ordered by count descending, then value ascending.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> ranked() const;
};

// Up to 4 high-occurrence and 8 low-occurrence patterns. A pattern's
// identifier is its position in its group.
class PatternDictionary {
 public:
  PatternDictionary() = default;

  // Throws ContractError if a group exceeds its capacity or any pattern
  // appears twice across the two groups.
  PatternDictionary(std::vector<std::uint32_t> high, std::vector<std::uint32_t> low);

  const std::vector<std::uint32_t>& high() const noexcept { return high_; }
  const std::vector<std::uint32_t>& low() const noexcept { return low_; }
  std::size_t size() const noexcept { return high_.size() + low_.size(); }
  bool empty() const noexcept { return size() == 0; }

  // Kernel-ready lookup table: high patterns carry codes 0..3, low patterns
  // kernels::kLowBase + 0..7.
  const kernels::PatternTable& table() const noexcept { return table_; }

  friend bool operator==(const PatternDictionary& a, const PatternDictionary& b) {
    return a.high_ == b.high_ && a.low_ == b.low_;
  }

 private:
  std::vector<std::uint32_t> high_;
  std::vector<std::uint32_t> low_;
  kernels::PatternTable table_;
};

struct HighMatch {
  std::uint8_t index;
  friend bool operator==(HighMatch, HighMatch) = default;
};
struct LowMatch {
  std::uint8_t index;
  friend bool operator==(LowMatch, LowMatch) = default;
};
struct Miss {
  friend bool operator==(Miss, Miss) = default;
};
using Classification = std::variant<HighMatch, LowMatch, Miss>;

// Matched-chunk tallies: m_h, m_l and m = m_h + m_l.
struct MatchCounts {
  std::uint64_t high = 0;
  std::uint64_t low = 0;
  std::uint64_t chunks = 0;

  std::uint64_t matched() const noexcept { return high + low; }
  std::uint64_t misses() const noexcept { return chunks - matched(); }
  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

ChunkHistogram build_histogram(std::span<const Chunk> chunks);
// Same result as build_histogram(chunk_rows(matrix)) without materializing chunks.
ChunkHistogram build_histogram(const AdjacencyMatrix& matrix);

// Top 12 values by (count desc, value asc); first 4 go high, next 8 go low.
PatternDictionary select_patterns(const ChunkHistogram& hist);

Classification classify(const PatternDictionary& dict, std::uint32_t chunk_value);

// Counts the chunks of `matrix` that each dictionary group would match.
MatchCounts count_matches(const AdjacencyMatrix& matrix, const PatternDictionary& dict);

// Fixed-dictionary text: one hex pattern per line (optional 0x prefix, '#'
// comments allowed); the first 4 form the high group, up to 8 more the low.
PatternDictionary parse_dictionary(std::istream& in);
PatternDictionary read_dictionary(const std::filesystem::path& path);

}  // namespace hgc
