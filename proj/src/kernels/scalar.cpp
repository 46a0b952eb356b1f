#include <bit>

#include "hgc/kernels.hpp"

namespace hgc::kernels::scalar {

ClassifyTally classify(std::span<const std::uint32_t> words, const PatternTable& table,
                       std::span<std::uint8_t> codes) {
  ClassifyTally tally;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint8_t code = kMissCode;
    for (std::size_t p = 0; p < table.size; ++p) {
      if (words[i] == table.values[p]) {
        code = table.codes[p];
        break;
      }
    }
    codes[i] = code;
    if (code < kLowBase) {
      ++tally.high;
    } else if (code != kMissCode) {
      ++tally.low;
    }
  }
  return tally;
}

std::uint64_t popcount(std::span<const std::uint32_t> words) {
  std::uint64_t n = 0;
  for (std::uint32_t w : words) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

}  // namespace hgc::kernels::scalar
