#pragma once

#include <cstdint>
#include <iosfwd>

#include "hgc/patterns.hpp"

namespace hgc::size_model {

// All sizes are in bits. Chunk count is v * ceil(v / s), which equals
// (v / s) * v when s divides v.
std::uint64_t chunk_count(std::uint64_t nodes, unsigned pattern_bits);

// Every chunk matched, identifiers of log2(n) bits plus a 1-bit flag.
// Throws ContractError unless n is a power of two >= 2.
std::uint64_t ideal_uniform_size(std::uint32_t patterns, std::uint64_t nodes, unsigned pattern_bits);

// m of the chunks matched, the rest stored raw behind a 1-bit flag.
std::uint64_t uniform_size(std::uint32_t patterns, std::uint64_t nodes, unsigned pattern_bits,
                           std::uint64_t matches);

struct TwoGroupInputs {
  std::uint32_t high_patterns = 4;
  std::uint32_t low_patterns = 8;
  std::uint64_t high_matches = 0;
  std::uint64_t low_matches = 0;
  std::uint64_t matches = 0;  // must equal high_matches + low_matches
  std::uint64_t nodes = 0;
  unsigned pattern_bits = 32;
};

// (1 + log2 h) m_h + (1 + log2 l) m_l + (1 + s)(chunks - m), as published.
// It leaves out the bit that tells the two groups apart.
std::uint64_t two_group_size_literal(const TwoGroupInputs& in);

// (2 + log2 h) m_h + (2 + log2 l) m_l + (1 + s)(chunks - m). With h = 4,
// l = 8 and s = 32 this is exactly the codec's body length.
std::uint64_t two_group_size_corrected(const TwoGroupInputs& in);

struct SizeReport {
  std::uint64_t nodes = 0;
  std::uint64_t chunks = 0;
  std::uint64_t high_matches = 0;
  std::uint64_t low_matches = 0;
  std::uint64_t raw_bits = 0;
  std::uint32_t uniform_patterns = 16;
  std::uint64_t ideal_uniform_bits = 0;
  std::uint64_t uniform_bits = 0;
  std::uint64_t two_group_literal_bits = 0;
  std::uint64_t two_group_corrected_bits = 0;
  std::uint64_t measured_body_bits = 0;
  double reduction_fraction = 0.0;  // 1 - measured / raw
};

// `uniform_patterns` is the n used for the single-group predictions; 16 is
// the smallest power of two that can address all 12 dictionary entries.
SizeReport make_report(std::uint64_t nodes, const MatchCounts& counts, std::uint64_t measured_body_bits,
                       std::uint32_t uniform_patterns = 16);

void write_report_csv(std::ostream& out, const SizeReport& report);
void write_report_text(std::ostream& out, const SizeReport& report);

}  // namespace hgc::size_model
