#include "hgc/size_model.hpp"

#include <bit>
#include <iomanip>
#include <ostream>
#include <string>

#include "hgc/error.hpp"

namespace hgc::size_model {
namespace {

unsigned exact_log2(std::uint32_t n, const char* what) {
  if (!std::has_single_bit(n)) {
    throw ContractError(std::string(what) + " = " + std::to_string(n) + " is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(n));
}

void check_two_group(const TwoGroupInputs& in, std::uint64_t chunks) {
  if (in.matches != in.high_matches + in.low_matches) {
    throw ContractError("m must equal m_h + m_l");
  }
  if (in.matches > chunks) throw ContractError("more matches than chunks");
}

}  // namespace

std::uint64_t chunk_count(std::uint64_t nodes, unsigned pattern_bits) {
  if (pattern_bits == 0) throw ContractError("pattern width must be positive");
  return nodes * ((nodes + pattern_bits - 1) / pattern_bits);
}

std::uint64_t ideal_uniform_size(std::uint32_t patterns, std::uint64_t nodes, unsigned pattern_bits) {
  if (patterns < 2) throw ContractError("pattern count must be at least 2");
  const unsigned id_bits = exact_log2(patterns, "n");
  return (1 + id_bits) * chunk_count(nodes, pattern_bits);
}

std::uint64_t uniform_size(std::uint32_t patterns, std::uint64_t nodes, unsigned pattern_bits,
                           std::uint64_t matches) {
  if (patterns < 2) throw ContractError("pattern count must be at least 2");
  const unsigned id_bits = exact_log2(patterns, "n");
  const std::uint64_t chunks = chunk_count(nodes, pattern_bits);
  if (matches > chunks) throw ContractError("more matches than chunks");
  return (1 + id_bits) * matches + (1 + pattern_bits) * (chunks - matches);
}

std::uint64_t two_group_size_literal(const TwoGroupInputs& in) {
  const unsigned h_bits = exact_log2(in.high_patterns, "h");
  const unsigned l_bits = exact_log2(in.low_patterns, "l");
  const std::uint64_t chunks = chunk_count(in.nodes, in.pattern_bits);
  check_two_group(in, chunks);
  return (1 + h_bits) * in.high_matches + (1 + l_bits) * in.low_matches +
         (1 + in.pattern_bits) * (chunks - in.matches);
}

std::uint64_t two_group_size_corrected(const TwoGroupInputs& in) {
  const unsigned h_bits = exact_log2(in.high_patterns, "h");
  const unsigned l_bits = exact_log2(in.low_patterns, "l");
  const std::uint64_t chunks = chunk_count(in.nodes, in.pattern_bits);
  check_two_group(in, chunks);
  return (2 + h_bits) * in.high_matches + (2 + l_bits) * in.low_matches +
         (1 + in.pattern_bits) * (chunks - in.matches);
}

SizeReport make_report(std::uint64_t nodes, const MatchCounts& counts, std::uint64_t measured_body_bits,
                       std::uint32_t uniform_patterns) {
  SizeReport r;
  r.nodes = nodes;
  r.chunks = chunk_count(nodes, kChunkBits);
  r.high_matches = counts.high;
  r.low_matches = counts.low;
  r.raw_bits = nodes * nodes;
  r.uniform_patterns = uniform_patterns;
  r.ideal_uniform_bits = ideal_uniform_size(uniform_patterns, nodes, kChunkBits);
  r.uniform_bits = uniform_size(uniform_patterns, nodes, kChunkBits, counts.matched());
  const TwoGroupInputs in{.high_matches = counts.high,
                          .low_matches = counts.low,
                          .matches = counts.matched(),
                          .nodes = nodes};
  r.two_group_literal_bits = two_group_size_literal(in);
  r.two_group_corrected_bits = two_group_size_corrected(in);
  r.measured_body_bits = measured_body_bits;
  r.reduction_fraction =
      r.raw_bits == 0 ? 0.0 : 1.0 - static_cast<double>(measured_body_bits) / static_cast<double>(r.raw_bits);
  return r;
}

void write_report_csv(std::ostream& out, const SizeReport& r) {
  out << "nodes,chunks,high_matched,low_matched,raw_bits,uniform_n,ideal_uniform_bits,uniform_bits,"
         "two_group_literal_bits,two_group_corrected_bits,measured_body_bits,reduction_fraction\n";
  out << r.nodes << ',' << r.chunks << ',' << r.high_matches << ',' << r.low_matches << ',' << r.raw_bits << ','
      << r.uniform_patterns << ',' << r.ideal_uniform_bits << ',' << r.uniform_bits << ','
      << r.two_group_literal_bits << ',' << r.two_group_corrected_bits << ',' << r.measured_body_bits << ','
      << std::fixed << std::setprecision(6) << r.reduction_fraction << '\n';
}

void write_report_text(std::ostream& out, const SizeReport& r) {
  const auto row = [&out](const char* label, auto value) {
    out << std::left << std::setw(28) << label << value << '\n';
  };
  row("nodes", r.nodes);
  row("chunks", r.chunks);
  row("high matched (m_h)", r.high_matches);
  row("low matched (m_l)", r.low_matches);
  row("raw bits (v*v)", r.raw_bits);
  row(("ideal uniform, n=" + std::to_string(r.uniform_patterns)).c_str(), r.ideal_uniform_bits);
  row(("uniform, n=" + std::to_string(r.uniform_patterns)).c_str(), r.uniform_bits);
  row("two-group, literal", r.two_group_literal_bits);
  row("two-group, corrected", r.two_group_corrected_bits);
  row("measured body bits", r.measured_body_bits);
  out << std::left << std::setw(28) << "reduction" << std::fixed << std::setprecision(2)
      << 100.0 * r.reduction_fraction << "%\n";
}

}  // namespace hgc::size_model
