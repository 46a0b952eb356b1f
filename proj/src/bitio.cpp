#include "hgc/bitio.hpp"

#include <algorithm>
#include <string>

#include "hgc/error.hpp"

namespace hgc {

void BitWriter::append_bits(std::uint64_t value, unsigned width) {
  if (width == 0 || width > 64) {
    throw ContractError("append_bits: width " + std::to_string(width) + " outside 1..64");
  }
  if (width < 64 && (value >> width) != 0) {
    throw ContractError("append_bits: value does not fit in " + std::to_string(width) + " bits");
  }
  bit_len_ += width;

  // Top up the pending partial byte first, then emit whole bytes directly.
  while (width > 0) {
    const unsigned take = std::min(width, 8u - acc_bits_);
    const unsigned shift = width - take;
    const std::uint64_t piece = (value >> shift) & ((std::uint64_t{1} << take) - 1);
    acc_ = (acc_ << take) | piece;
    acc_bits_ += take;
    width = shift;
    if (acc_bits_ == 8) {
      bytes_.push_back(static_cast<std::uint8_t>(acc_));
      acc_ = 0;
      acc_bits_ = 0;
    }
  }
}

std::vector<std::uint8_t> BitWriter::finish() {
  if (acc_bits_ > 0) {
    bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - acc_bits_)));
  }
  acc_ = 0;
  acc_bits_ = 0;
  bit_len_ = 0;
  return std::move(bytes_);
}

BitReader::BitReader(std::span<const std::uint8_t> source, std::uint64_t limit_bits)
    : source_(source), limit_(limit_bits) {
  if (limit_bits > static_cast<std::uint64_t>(source.size()) * 8) {
    throw ContractError("BitReader: limit exceeds source length");
  }
}

std::uint64_t BitReader::read_bits(unsigned width) {
  if (width == 0 || width > 64) {
    throw ContractError("read_bits: width " + std::to_string(width) + " outside 1..64");
  }
  if (width > remaining()) {
    throw TruncatedStreamError("read_bits: need " + std::to_string(width) + " bits, " +
                               std::to_string(remaining()) + " remain");
  }
  std::uint64_t out = 0;
  unsigned left = width;
  while (left > 0) {
    const std::uint8_t byte = source_[static_cast<std::size_t>(cursor_ >> 3)];
    const unsigned used = static_cast<unsigned>(cursor_ & 7);
    const unsigned avail = 8 - used;
    const unsigned take = std::min(left, avail);
    const unsigned piece = (static_cast<unsigned>(byte) >> (avail - take)) & ((1u << take) - 1);
    out = (out << take) | piece;
    cursor_ += take;
    left -= take;
  }
  return out;
}

}  // namespace hgc
