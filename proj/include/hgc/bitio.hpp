#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hgc {

// MSB-first bit packer. Bits fill each byte from bit 7 downwards; the final
// partial byte is zero padded by finish().
class BitWriter {
 public:
  BitWriter() = default;

  // Appends the `width` low-order bits of `value`, most significant first.
  // Throws ContractError unless 1 <= width <= 64 and value < 2^width.
  void append_bits(std::uint64_t value, unsigned width);

  std::uint64_t bit_len() const noexcept { return bit_len_; }

  void reserve_bits(std::uint64_t bits) { bytes_.reserve(static_cast<std::size_t>((bits + 7) / 8)); }

  // Flushes the pending partial byte and hands the buffer over. The writer is
  // left empty.
  std::vector<std::uint8_t> finish();

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t acc_ = 0;     // pending bits, right aligned
  unsigned acc_bits_ = 0;     // always < 8 between calls
  std::uint64_t bit_len_ = 0;
};

class BitReader {
 public:
  // `limit_bits` must not exceed 8 * source.size().
  BitReader(std::span<const std::uint8_t> source, std::uint64_t limit_bits);
  explicit BitReader(std::span<const std::uint8_t> source)
      : BitReader(source, static_cast<std::uint64_t>(source.size()) * 8) {}

  // Throws TruncatedStreamError if fewer than `width` bits remain; the cursor
  // is left untouched in that case.
  std::uint64_t read_bits(unsigned width);
  bool read_bit() { return read_bits(1) != 0; }

  std::uint64_t cursor() const noexcept { return cursor_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t remaining() const noexcept { return limit_ - cursor_; }

 private:
  std::span<const std::uint8_t> source_;
  std::uint64_t cursor_ = 0;
  std::uint64_t limit_ = 0;
};

}  // namespace hgc
