#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

// Text edge list: one "u w" pair of decimal indices per line, '#' comments,
// blank lines ignored, optional "n <v>" header giving the node count.
struct EdgeList {
  std::optional<std::uint64_t> nodes;  // from the "n <v>" header, if present
  std::vector<Edge> edges;             // always 0-indexed
};

// Throws ParseError (with the offending line number) on malformed lines, or
// on an index of 0 when `one_indexed` is set.
EdgeList parse_edge_list(std::istream& in, bool one_indexed = false);
EdgeList read_edge_list(const std::filesystem::path& path, bool one_indexed = false);

// Resolves the node count (explicit override first, then header) and builds
// the matrix. Throws ParseError when neither is available.
AdjacencyMatrix load_matrix(const EdgeList& list, std::optional<std::uint64_t> nodes_override, bool undirected);

// Writes the "n <v>" header and every set bit, 0-indexed. With `undirected`
// only pairs with u <= w are written, so the file must be read back with the
// undirected flag.
void write_edge_list(std::ostream& out, const AdjacencyMatrix& matrix, bool undirected = false);
void write_edge_list(const std::filesystem::path& path, const AdjacencyMatrix& matrix, bool undirected = false);

}  // namespace hgc
