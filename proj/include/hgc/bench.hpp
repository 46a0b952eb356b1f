#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <string>
#include <vector>

namespace hgc::bench {

enum class Model { kErdosRenyi, kPowerLaw };

std::string_view model_name(Model model);
// Accepts "er" and "pl". Throws ContractError otherwise.
Model parse_model(std::string_view name);

struct Cell {
  Model model = Model::kErdosRenyi;
  std::uint64_t nodes = 0;
  std::uint32_t mean_degree = 0;
  std::uint64_t seed = 0;
  bool undirected = true;
};

// One output row. The matched counts are the pattern-count quantities
// (possible, matched, high, low); reduction is body bits against v*v, and
// file_reduction also charges the container header and trailer.
struct Row {
  Cell cell;
  std::uint64_t edges = 0;  // set bits in the matrix
  std::uint64_t max_possible_chunks = 0;
  std::uint64_t total_matched = 0;
  std::uint64_t high_matched = 0;
  std::uint64_t low_matched = 0;
  std::uint64_t misses = 0;
  std::uint64_t body_bits = 0;
  std::uint64_t raw_bits = 0;
  std::uint64_t file_bytes = 0;
  double reduction = 0.0;
  double file_reduction = 0.0;
  // Group invariant of the adaptive dictionary: every high pattern's count is
  // at least every low pattern's count.
  bool high_dominates_low = false;
  bool round_trip_ok = false;
};

struct Plan {
  std::vector<Model> models{Model::kErdosRenyi, Model::kPowerLaw};
  std::vector<std::uint64_t> sizes{1024, 2048, 4096, 8192};
  std::vector<std::uint32_t> degrees{2, 4, 8, 16};
  std::vector<std::uint64_t> seeds{1};
  bool undirected = true;
  bool verify_round_trip = true;
  unsigned workers = 1;
};

// ER uses p = d / (v - 1); the power-law model targets d * v / 2 edges.
Row run_cell(const Cell& cell, bool verify_round_trip = true);

// Rows ordered by (model, v, degree, seed) whatever the worker count.
std::vector<Row> run(const Plan& plan);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const Row& row);

}  // namespace hgc::bench
