#include <immintrin.h>

#include "hgc/kernels.hpp"

namespace hgc::kernels::avx2 {
namespace {

inline std::uint64_t popcount256(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0F);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  const __m256i sad = _mm256_sad_epu8(bytes, _mm256_setzero_si256());
  return static_cast<std::uint64_t>(_mm256_extract_epi64(sad, 0)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(sad, 1)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(sad, 2)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(sad, 3));
}

inline int lane_count(__m256i mask) {
  return __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(mask))));
}

}  // namespace

ClassifyTally classify(std::span<const std::uint32_t> words, const PatternTable& table,
                       std::span<std::uint8_t> codes) {
  ClassifyTally tally;
  const std::size_t n = words.size();
  std::size_t i = 0;

  __m256i pattern[kMaxPatterns];
  __m256i code[kMaxPatterns];
  for (std::size_t p = 0; p < table.size; ++p) {
    pattern[p] = _mm256_set1_epi32(static_cast<int>(table.values[p]));
    code[p] = _mm256_set1_epi32(table.codes[p]);
  }
  const __m256i miss = _mm256_set1_epi32(kMissCode);

  for (; i + 8 <= n; i += 8) {
    const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
    __m256i out = miss;
    __m256i high_hits = _mm256_setzero_si256();
    __m256i low_hits = _mm256_setzero_si256();
    for (std::size_t p = 0; p < table.size; ++p) {
      const __m256i eq = _mm256_cmpeq_epi32(w, pattern[p]);
      out = _mm256_blendv_epi8(out, code[p], eq);
      if (table.codes[p] < kLowBase) {
        high_hits = _mm256_or_si256(high_hits, eq);
      } else {
        low_hits = _mm256_or_si256(low_hits, eq);
      }
    }
    tally.high += static_cast<std::uint64_t>(lane_count(high_hits));
    tally.low += static_cast<std::uint64_t>(lane_count(low_hits));

    // 8 x i32 (values <= 255) -> 8 x u8
    const __m128i lo = _mm256_castsi256_si128(out);
    const __m128i hi = _mm256_extracti128_si256(out, 1);
    const __m128i packed16 = _mm_packus_epi32(lo, hi);
    const __m128i packed8 = _mm_packus_epi16(packed16, packed16);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(codes.data() + i), packed8);
  }

  if (i < n) {
    const ClassifyTally tail = scalar::classify(words.subspan(i), table, codes.subspan(i));
    tally.high += tail.high;
    tally.low += tail.low;
  }
  return tally;
}

std::uint64_t popcount(std::span<const std::uint32_t> words) {
  const std::size_t n = words.size();
  std::size_t i = 0;
  std::uint64_t total = 0;
  for (; i + 8 <= n; i += 8) {
    total += popcount256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i)));
  }
  return total + scalar::popcount(words.subspan(i));
}

}  // namespace hgc::kernels::avx2
