#pragma once

// Data-parallel inner loops of the codec. Each kernel has a portable scalar
// reference and optional ISA-specific variants; active() picks the best one
// the running CPU supports. Variants must agree bit for bit with the scalar
// reference on every input.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hgc::kernels {

inline constexpr std::size_t kMaxPatterns = 12;
inline constexpr std::uint8_t kMissCode = 0xFF;
// Codes below kLowBase are high-group indices, codes kLowBase.. are low-group
// indices offset by kLowBase.
inline constexpr std::uint8_t kLowBase = 4;

struct PatternTable {
  std::array<std::uint32_t, kMaxPatterns> values{};
  std::array<std::uint8_t, kMaxPatterns> codes{};
  std::size_t size = 0;
};

struct ClassifyTally {
  std::uint64_t high = 0;
  std::uint64_t low = 0;
};

// codes[i] receives the code of the pattern equal to words[i], or kMissCode.
// Pattern values must be distinct. codes.size() must be >= words.size().
using ClassifyFn = ClassifyTally (*)(std::span<const std::uint32_t> words, const PatternTable& table,
                                     std::span<std::uint8_t> codes);
using PopcountFn = std::uint64_t (*)(std::span<const std::uint32_t> words);

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  ClassifyFn classify;
  PopcountFn popcount;
};

// Best variant for this CPU. Setting HGC_ISA=scalar in the environment pins
// the scalar reference.
const KernelTable& active();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* for_isa(Isa isa);

namespace scalar {
ClassifyTally classify(std::span<const std::uint32_t> words, const PatternTable& table,
                       std::span<std::uint8_t> codes);
std::uint64_t popcount(std::span<const std::uint32_t> words);
}  // namespace scalar

#if defined(HGC_HAVE_AVX2)
namespace avx2 {
ClassifyTally classify(std::span<const std::uint32_t> words, const PatternTable& table,
                       std::span<std::uint8_t> codes);
std::uint64_t popcount(std::span<const std::uint32_t> words);
}  // namespace avx2
#endif

}  // namespace hgc::kernels
