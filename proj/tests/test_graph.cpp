#include <gtest/gtest.h>

#include <sstream>

#include "hgc/edge_list.hpp"
#include "hgc/error.hpp"
#include "hgc/graph.hpp"
#include "support.hpp"

namespace hgc {
namespace {

TEST(FromEdgeList, EmptyEdgesGiveZeroMatrix) {
  const auto m = from_edge_list({}, 4, false);
  EXPECT_EQ(m.nodes(), 4u);
  EXPECT_EQ(m.edge_count(), 0u);
}

TEST(FromEdgeList, UndirectedSetsBothDirections) {
  const std::vector<Edge> edges{{0, 1}};
  const auto m = from_edge_list(edges, 32, true);
  EXPECT_TRUE(m.test(0, 1));
  EXPECT_TRUE(m.test(1, 0));
  EXPECT_EQ(m.edge_count(), 2u);
}

TEST(FromEdgeList, DuplicatesAreIdempotent) {
  const std::vector<Edge> edges{{0, 1}, {0, 1}};
  EXPECT_EQ(from_edge_list(edges, 32, false).edge_count(), 1u);
}

TEST(FromEdgeList, SelfLoopAllowedOutOfRangeRejected) {
  const std::vector<Edge> loop{{3, 3}};
  EXPECT_TRUE(from_edge_list(loop, 4, false).test(3, 3));
  const std::vector<Edge> bad{{0, 4}};
  EXPECT_THROW(from_edge_list(bad, 4, false), OutOfRangeError);
  EXPECT_THROW(from_edge_list({}, 0, false), ContractError);
}

TEST(ChunkRows, CountsAtPaperSizes) {
  EXPECT_EQ(chunk_rows(AdjacencyMatrix(1024)).size(), 32768u);
  EXPECT_EQ(chunk_count(2048), 131072u);
  EXPECT_EQ(chunk_count(4096), 524288u);
  EXPECT_EQ(chunk_rows(AdjacencyMatrix(8192)).size(), 2097152u);
}

TEST(ChunkRows, SingleEdgeMapsToMsbFirstColumn) {
  const std::vector<Edge> edges{{0, 1}};
  const auto chunks = chunk_rows(from_edge_list(edges, 32, false));
  ASSERT_EQ(chunks.size(), 32u);
  EXPECT_EQ(chunks[0], (Chunk{0x40000000u, 0, 0}));
  for (std::size_t i = 1; i < 32; ++i) EXPECT_EQ(chunks[i], (Chunk{0, i, 0}));
}

TEST(ChunkRows, RowsArePaddedIndependently) {
  // v = 33: two chunks per row, the second carries only column 32 in its MSB.
  const std::vector<Edge> edges{{0, 32}, {1, 0}};
  const auto chunks = chunk_rows(from_edge_list(edges, 33, false));
  ASSERT_EQ(chunks.size(), 66u);
  EXPECT_EQ(chunks[0].value, 0u);
  EXPECT_EQ(chunks[1], (Chunk{0x80000000u, 0, 1}));
  EXPECT_EQ(chunks[2], (Chunk{0x80000000u, 1, 0}));
  EXPECT_EQ(chunks[3].value, 0u);
}

TEST(ChunkRows, ReassemblyIsLossless) {
  for (std::uint64_t v : {1u, 17u, 32u, 33u, 64u, 100u}) {
    const auto m = testing::random_matrix(v, 0.2, v);
    const auto chunks = chunk_rows(m);
    ASSERT_EQ(chunks.size(), v * ((v + 31) / 32));
    for (const Chunk& c : chunks) ASSERT_EQ(c.value, testing::reference_chunk(m, c.row, c.offset));
    ASSERT_EQ(assemble_chunks(v, chunks), m);
  }
}

TEST(AdjacencyMatrix, FromWordsRejectsPaddingBits) {
  EXPECT_THROW(AdjacencyMatrix::from_words(17, std::vector<std::uint32_t>(17, 1u)), OutOfRangeError);
  EXPECT_THROW(AdjacencyMatrix::from_words(17, std::vector<std::uint32_t>(16, 0u)), ContractError);
  EXPECT_NO_THROW(AdjacencyMatrix::from_words(17, std::vector<std::uint32_t>(17, 0x80000000u)));
}

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(density(AdjacencyMatrix(8)), 0.0);
  AdjacencyMatrix full(5);
  for (NodeId r = 0; r < 5; ++r)
    for (NodeId c = 0; c < 5; ++c) full.set(r, c);
  EXPECT_DOUBLE_EQ(density(full), 1.0);
  const std::vector<Edge> one{{3, 9}};
  EXPECT_DOUBLE_EQ(density(from_edge_list(one, 32, false)), 1.0 / 1024.0);
  EXPECT_THROW(density(AdjacencyMatrix(0)), ContractError);
}

TEST(EdgeListText, ParsesHeaderCommentsAndBlankLines) {
  std::istringstream in("# comment\nn 5\n\n0 1\n  3\t4  \n# end\n");
  const auto list = parse_edge_list(in);
  ASSERT_TRUE(list.nodes.has_value());
  EXPECT_EQ(*list.nodes, 5u);
  EXPECT_EQ(list.edges, (std::vector<Edge>{{0, 1}, {3, 4}}));
}

TEST(EdgeListText, OneIndexedShift) {
  std::istringstream in("1 2\n5 5\n");
  const auto list = parse_edge_list(in, true);
  EXPECT_EQ(list.edges, (std::vector<Edge>{{0, 1}, {4, 4}}));
  std::istringstream zero("0 1\n");
  EXPECT_THROW(parse_edge_list(zero, true), ParseError);
}

TEST(EdgeListText, ReportsLineNumberOfBadLine) {
  std::istringstream in("0 1\n1 2\n3 x\n");
  try {
    parse_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream extra("0 1 2\n");
  EXPECT_THROW(parse_edge_list(extra), ParseError);
  std::istringstream neg("-1 2\n");
  EXPECT_THROW(parse_edge_list(neg), ParseError);
}

TEST(EdgeListText, NodeCountResolution) {
  std::istringstream in("n 4\n0 3\n");
  const auto list = parse_edge_list(in);
  EXPECT_EQ(load_matrix(list, std::nullopt, false).nodes(), 4u);
  EXPECT_EQ(load_matrix(list, 40, false).nodes(), 40u);
  EXPECT_THROW(load_matrix(list, 2, false), ParseError);
  std::istringstream headerless("0 3\n");
  EXPECT_THROW(load_matrix(parse_edge_list(headerless), std::nullopt, false), ParseError);
  std::istringstream over("n 2\n0 3\n");
  EXPECT_THROW(parse_edge_list(over), ParseError);
}

TEST(EdgeListText, WriteReadRoundTrip) {
  for (bool undirected : {false, true}) {
    const auto m = testing::random_matrix(45, 0.1, 11, undirected);
    std::stringstream s;
    write_edge_list(s, m, undirected);
    EXPECT_EQ(load_matrix(parse_edge_list(s), std::nullopt, undirected), m);
  }
}

}  // namespace
}  // namespace hgc
