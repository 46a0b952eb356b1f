#include "hgc/codec.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>

#include "hgc/bitio.hpp"
#include "hgc/error.hpp"
#include "hgc/kernels.hpp"

namespace hgc {
namespace {

constexpr std::size_t kEncodeBlock = 1 << 14;
// Largest node count whose chunk total times 33 bits still fits in 64 bits.
constexpr std::uint64_t kMaxContainerNodes = std::uint64_t{1} << 31;

constexpr std::string_view kMagic = "HGC1";

constexpr std::uint64_t kHighPrefix = 0b10;
constexpr std::uint64_t kLowPrefix = 0b11;

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, unsigned bytes) {
  std::uint64_t value = 0;
  for (unsigned i = 0; i < bytes; ++i) value |= std::uint64_t{in[at + i]} << (8 * i);
  return value;
}

std::uint32_t crc_of(std::span<const std::uint8_t> bytes) {
  return static_cast<std::uint32_t>(crc32_z(0L, bytes.data(), bytes.size()));
}

std::uint32_t row_padding_mask(std::uint64_t nodes) {
  const unsigned tail = static_cast<unsigned>(nodes % kChunkBits);
  return tail == 0 ? 0u : (0xFFFFFFFFu >> tail);
}

}  // namespace

CompressedGraph compress(const AdjacencyMatrix& matrix, const PatternDictionary& dict, MatchCounts* counts) {
  const auto words = matrix.words();
  const auto& kernel = kernels::active();
  const auto& table = dict.table();

  BitWriter writer;
  writer.reserve_bits(static_cast<std::uint64_t>(words.size()) * kHighTokenBits);
  std::vector<std::uint8_t> codes(std::min(words.size(), kEncodeBlock));
  MatchCounts tally;
  tally.chunks = words.size();

  for (std::size_t at = 0; at < words.size(); at += codes.size()) {
    const auto block = words.subspan(at, std::min(codes.size(), words.size() - at));
    const auto t = kernel.classify(block, table, codes);
    tally.high += t.high;
    tally.low += t.low;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::uint8_t code = codes[i];
      if (code == kernels::kMissCode) {
        writer.append_bits(block[i], kMissTokenBits);  // leading 0 flag is implicit
      } else if (code < kernels::kLowBase) {
        writer.append_bits((kHighPrefix << kHighIdBits) | code, kHighTokenBits);
      } else {
        writer.append_bits((kLowPrefix << kLowIdBits) | (code - kernels::kLowBase), kLowTokenBits);
      }
    }
  }

  CompressedGraph out;
  out.nodes = matrix.nodes();
  out.dict = dict;
  out.body_bits = writer.bit_len();
  out.body = writer.finish();
  if (counts != nullptr) *counts = tally;
  return out;
}

CompressedGraph compress_adaptive(const AdjacencyMatrix& matrix, MatchCounts* counts) {
  return compress(matrix, select_patterns(build_histogram(matrix)), counts);
}

AdjacencyMatrix decompress(const CompressedGraph& compressed) {
  if (compressed.nodes > kMaxContainerNodes) throw CorruptContainerError("node count too large");
  if (compressed.body.size() != (compressed.body_bits + 7) / 8) {
    throw CorruptContainerError("body length does not match body_bits");
  }
  const std::uint64_t nodes = compressed.nodes;
  const std::size_t per_row = static_cast<std::size_t>(chunks_per_row(nodes));
  const std::uint64_t total = chunk_count(nodes);
  // Each token is at least 4 bits; refuse before allocating for a short body.
  if (total > compressed.body_bits / kHighTokenBits) {
    throw CorruptContainerError("body too short for " + std::to_string(total) + " chunks");
  }
  const auto& high = compressed.dict.high();
  const auto& low = compressed.dict.low();
  const std::uint32_t padding = row_padding_mask(nodes);

  std::vector<std::uint32_t> words(static_cast<std::size_t>(total));
  BitReader reader(compressed.body, compressed.body_bits);
  try {
    for (std::size_t k = 0; k < words.size(); ++k) {
      std::uint32_t word = 0;
      if (!reader.read_bit()) {
        word = static_cast<std::uint32_t>(reader.read_bits(kChunkBits));
      } else if (!reader.read_bit()) {
        const auto id = reader.read_bits(kHighIdBits);
        if (id >= high.size()) throw CorruptContainerError("unused high identifier " + std::to_string(id));
        word = high[id];
      } else {
        const auto id = reader.read_bits(kLowIdBits);
        if (id >= low.size()) throw CorruptContainerError("unused low identifier " + std::to_string(id));
        word = low[id];
      }
      if ((k + 1) % per_row == 0 && (word & padding) != 0) {
        throw CorruptContainerError("nonzero row padding in chunk " + std::to_string(k));
      }
      words[k] = word;
    }
  } catch (const TruncatedStreamError& e) {
    throw CorruptContainerError(std::string("truncated body: ") + e.what());
  }
  if (reader.remaining() != 0) {
    throw CorruptContainerError(std::to_string(reader.remaining()) + " bits left after the last chunk");
  }
  const unsigned tail = static_cast<unsigned>(compressed.body_bits % 8);
  if (tail != 0 && (compressed.body.back() & (0xFFu >> tail)) != 0) {
    throw CorruptContainerError("nonzero padding after body_bits");
  }
  return AdjacencyMatrix::from_words(nodes, std::move(words));
}

std::vector<std::uint8_t> write_container(const CompressedGraph& compressed) {
  const auto& high = compressed.dict.high();
  const auto& low = compressed.dict.low();
  std::vector<std::uint8_t> out;
  out.reserve(kContainerFixedBytes + 4 * compressed.dict.size() + compressed.body.size() + kContainerTrailerBytes);
  for (char c : kMagic) out.push_back(static_cast<std::uint8_t>(c));
  out.push_back(kContainerVersion);
  put_le(out, compressed.nodes, 8);
  out.push_back(static_cast<std::uint8_t>(high.size()));
  out.push_back(static_cast<std::uint8_t>(low.size()));
  for (const auto* group : {&high, &low}) {
    for (std::uint32_t p : *group) {
      for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(p >> shift));
    }
  }
  put_le(out, compressed.body_bits, 8);
  out.insert(out.end(), compressed.body.begin(), compressed.body.end());
  put_le(out, crc_of(out), 4);
  return out;
}

CompressedGraph read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kContainerFixedBytes + kContainerTrailerBytes) {
    throw CorruptContainerError("container shorter than its fixed header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw CorruptContainerError("bad magic");
  if (bytes[4] != kContainerVersion) {
    throw CorruptContainerError("unsupported container version " + std::to_string(bytes[4]));
  }
  const std::size_t crc_at = bytes.size() - kContainerTrailerBytes;
  if (get_le(bytes, crc_at, 4) != crc_of(bytes.first(crc_at))) {
    throw CorruptContainerError("checksum mismatch");
  }

  CompressedGraph out;
  out.nodes = get_le(bytes, 5, 8);
  const std::size_t h = bytes[13];
  const std::size_t l = bytes[14];
  if (h > kHighCapacity || l > kLowCapacity) throw CorruptContainerError("dictionary group size out of range");
  const std::size_t header = kContainerFixedBytes + 4 * (h + l);
  if (bytes.size() < header + kContainerTrailerBytes) throw CorruptContainerError("header runs past end of file");

  std::vector<std::uint32_t> patterns;
  for (std::size_t i = 0; i < h + l; ++i) {
    const std::size_t at = 15 + 4 * i;
    patterns.push_back(std::uint32_t{bytes[at]} << 24 | std::uint32_t{bytes[at + 1]} << 16 |
                       std::uint32_t{bytes[at + 2]} << 8 | std::uint32_t{bytes[at + 3]});
  }
  try {
    out.dict = PatternDictionary(std::vector<std::uint32_t>(patterns.begin(), patterns.begin() + h),
                                 std::vector<std::uint32_t>(patterns.begin() + h, patterns.end()));
  } catch (const ContractError& e) {
    throw CorruptContainerError(e.what());
  }

  out.body_bits = get_le(bytes, header - 8, 8);
  const std::size_t body_bytes = crc_at - header;
  if (out.body_bits / 8 > body_bytes || (out.body_bits + 7) / 8 != body_bytes) {
    throw CorruptContainerError("header/body length mismatch");
  }
  if (out.nodes > kMaxContainerNodes) throw CorruptContainerError("node count too large");
  const std::uint64_t chunks = chunk_count(out.nodes);
  if (out.body_bits < chunks * kHighTokenBits || out.body_bits > chunks * kMissTokenBits) {
    throw CorruptContainerError("body_bits inconsistent with node count");
  }
  out.body.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header),
                  bytes.begin() + static_cast<std::ptrdiff_t>(crc_at));
  return out;
}

void save_container(const std::filesystem::path& path, const CompressedGraph& compressed) {
  const auto bytes = write_container(compressed);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

CompressedGraph load_container(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read error on " + path.string());
  return read_container(bytes);
}

}  // namespace hgc
