#include "hgc/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>

#include "hgc/error.hpp"

namespace hgc {

void ChunkHistogram::merge(const ChunkHistogram& other) {
  for (const auto& [value, count] : other.counts) counts[value] += count;
  total += other.total;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> ChunkHistogram::ranked() const {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

PatternDictionary::PatternDictionary(std::vector<std::uint32_t> high, std::vector<std::uint32_t> low)
    : high_(std::move(high)), low_(std::move(low)) {
  if (high_.size() > kHighCapacity) throw ContractError("dictionary: more than 4 high-occurrence patterns");
  if (low_.size() > kLowCapacity) throw ContractError("dictionary: more than 8 low-occurrence patterns");

  for (std::size_t i = 0; i < high_.size(); ++i) {
    table_.values[table_.size] = high_[i];
    table_.codes[table_.size++] = static_cast<std::uint8_t>(i);
  }
  for (std::size_t j = 0; j < low_.size(); ++j) {
    table_.values[table_.size] = low_[j];
    table_.codes[table_.size++] = static_cast<std::uint8_t>(kernels::kLowBase + j);
  }
  std::vector<std::uint32_t> all(table_.values.begin(), table_.values.begin() + table_.size);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ContractError("dictionary: duplicate pattern");
  }
}

ChunkHistogram build_histogram(std::span<const Chunk> chunks) {
  ChunkHistogram hist;
  for (const Chunk& c : chunks) ++hist.counts[c.value];
  hist.total = chunks.size();
  return hist;
}

ChunkHistogram build_histogram(const AdjacencyMatrix& matrix) {
  ChunkHistogram hist;
  const auto words = matrix.words();
  // Sparse matrices are mostly zero words; tally those outside the map.
  std::uint64_t zeros = 0;
  for (std::uint32_t w : words) {
    if (w == 0) {
      ++zeros;
    } else {
      ++hist.counts[w];
    }
  }
  if (zeros != 0) hist.counts[0] = zeros;
  hist.total = words.size();
  return hist;
}

PatternDictionary select_patterns(const ChunkHistogram& hist) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> top(hist.counts.begin(), hist.counts.end());
  const std::size_t keep = std::min(top.size(), kHighCapacity + kLowCapacity);
  std::partial_sort(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(keep), top.end(),
                    [](const auto& a, const auto& b) {
                      return a.second != b.second ? a.second > b.second : a.first < b.first;
                    });
  std::vector<std::uint32_t> high;
  std::vector<std::uint32_t> low;
  for (std::size_t i = 0; i < keep; ++i) {
    (i < kHighCapacity ? high : low).push_back(top[i].first);
  }
  return PatternDictionary(std::move(high), std::move(low));
}

Classification classify(const PatternDictionary& dict, std::uint32_t chunk_value) {
  const auto& high = dict.high();
  for (std::size_t i = 0; i < high.size(); ++i) {
    if (high[i] == chunk_value) return HighMatch{static_cast<std::uint8_t>(i)};
  }
  const auto& low = dict.low();
  for (std::size_t j = 0; j < low.size(); ++j) {
    if (low[j] == chunk_value) return LowMatch{static_cast<std::uint8_t>(j)};
  }
  return Miss{};
}

MatchCounts count_matches(const AdjacencyMatrix& matrix, const PatternDictionary& dict) {
  const auto words = matrix.words();
  const auto& kernel = kernels::active();
  std::vector<std::uint8_t> codes(std::min<std::size_t>(words.size(), 1 << 16));
  MatchCounts counts;
  counts.chunks = words.size();
  for (std::size_t at = 0; at < words.size(); at += codes.size()) {
    const auto block = words.subspan(at, std::min(codes.size(), words.size() - at));
    const auto tally = kernel.classify(block, dict.table(), codes);
    counts.high += tally.high;
    counts.low += tally.low;
  }
  return counts;
}

PatternDictionary parse_dictionary(std::istream& in) {
  std::vector<std::uint32_t> patterns;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;
    const auto last = view.find_last_not_of(" \t\r");
    view = view.substr(first, last - first + 1);
    if (view.starts_with("0x") || view.starts_with("0X")) view.remove_prefix(2);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value, 16);
    if (view.empty() || ec != std::errc{} || ptr != view.data() + view.size()) {
      throw ParseError("expected a 32-bit hex pattern", line_no);
    }
    if (patterns.size() == kHighCapacity + kLowCapacity) {
      throw ParseError("more than 12 patterns", line_no);
    }
    patterns.push_back(value);
  }
  const std::size_t split = std::min(patterns.size(), kHighCapacity);
  std::vector<std::uint32_t> high(patterns.begin(), patterns.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<std::uint32_t> low(patterns.begin() + static_cast<std::ptrdiff_t>(split), patterns.end());
  try {
    return PatternDictionary(std::move(high), std::move(low));
  } catch (const ContractError& e) {
    throw ParseError(e.what(), 0);
  }
}

PatternDictionary read_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_dictionary(in);
}

}  // namespace hgc
