#include "hgc/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "hgc/error.hpp"

namespace hgc {
namespace {

constexpr std::string_view kSpace = " \t\r";

// Splits on blanks; returns false if more than `max` fields are present.
bool split_fields(std::string_view line, std::vector<std::string_view>& fields, std::size_t max) {
  fields.clear();
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(kSpace, pos);
    if (pos == std::string_view::npos) return true;
    const std::size_t end = std::min(line.find_first_of(kSpace, pos), line.size());
    if (fields.size() == max) return false;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
}

std::uint64_t parse_index(std::string_view field, std::uint64_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(field) + "'", line_no);
  }
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, bool one_indexed) {
  EdgeList out;
  std::string line;
  std::vector<std::string_view> fields;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    const std::size_t first = view.find_first_not_of(kSpace);
    if (first == std::string_view::npos || view[first] == '#') continue;
    if (!split_fields(view, fields, 2) || fields.size() != 2) {
      throw ParseError("expected two fields", line_no);
    }
    if (fields[0] == "n") {
      if (out.nodes || !out.edges.empty()) throw ParseError("node-count header must come first", line_no);
      out.nodes = parse_index(fields[1], line_no);
      if (*out.nodes == 0) throw ParseError("node count must be at least 1", line_no);
      continue;
    }
    std::uint64_t u = parse_index(fields[0], line_no);
    std::uint64_t w = parse_index(fields[1], line_no);
    if (one_indexed) {
      if (u == 0 || w == 0) throw ParseError("index 0 in a one-indexed edge list", line_no);
      --u;
      --w;
    }
    if (out.nodes && (u >= *out.nodes || w >= *out.nodes)) {
      throw ParseError("edge index exceeds declared node count", line_no);
    }
    out.edges.emplace_back(u, w);
  }
  if (in.bad()) throw IoError("read error while parsing edge list");
  return out;
}

EdgeList read_edge_list(const std::filesystem::path& path, bool one_indexed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_edge_list(in, one_indexed);
}

AdjacencyMatrix load_matrix(const EdgeList& list, std::optional<std::uint64_t> nodes_override, bool undirected) {
  const std::optional<std::uint64_t> nodes = nodes_override ? nodes_override : list.nodes;
  if (!nodes) throw ParseError("node count unknown: no 'n <v>' header and no override", 0);
  try {
    return from_edge_list(list.edges, *nodes, undirected);
  } catch (const ContractError& e) {
    throw ParseError(e.what(), 0);
  }
}

void write_edge_list(std::ostream& out, const AdjacencyMatrix& matrix, bool undirected) {
  out << "n " << matrix.nodes() << '\n';
  for (const auto& [u, w] : edges_of(matrix)) {
    if (undirected && u > w) continue;
    out << u << ' ' << w << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const AdjacencyMatrix& matrix, bool undirected) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot create " + path.string());
  write_edge_list(out, matrix, undirected);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace hgc
