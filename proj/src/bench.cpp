#include "hgc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include "hgc/codec.hpp"
#include "hgc/error.hpp"
#include "hgc/patterns.hpp"
#include "hgc/synth.hpp"

namespace hgc::bench {
namespace {

bool groups_ordered(const ChunkHistogram& hist, const PatternDictionary& dict) {
  if (dict.high().empty() || dict.low().empty()) return true;
  std::uint64_t weakest_high = UINT64_MAX;
  for (std::uint32_t p : dict.high()) weakest_high = std::min(weakest_high, hist.count_of(p));
  for (std::uint32_t p : dict.low()) {
    if (hist.count_of(p) > weakest_high) return false;
  }
  return true;
}

}  // namespace

std::string_view model_name(Model model) { return model == Model::kErdosRenyi ? "er" : "pl"; }

Model parse_model(std::string_view name) {
  if (name == "er") return Model::kErdosRenyi;
  if (name == "pl") return Model::kPowerLaw;
  throw ContractError("unknown graph model '" + std::string(name) + "' (expected er or pl)");
}

Row run_cell(const Cell& cell, bool verify_round_trip) {
  AdjacencyMatrix matrix;
  if (cell.model == Model::kErdosRenyi) {
    const double p = cell.nodes > 1 ? std::min(1.0, static_cast<double>(cell.mean_degree) /
                                                         static_cast<double>(cell.nodes - 1))
                                    : 0.0;
    matrix = synth::gen_erdos_renyi(cell.nodes, p, cell.seed, cell.undirected);
  } else {
    const std::uint64_t target = std::min<std::uint64_t>(std::uint64_t{cell.mean_degree} * cell.nodes / 2,
                                                         cell.nodes * (cell.nodes - 1) / 2);
    matrix = synth::gen_power_law(cell.nodes, target, cell.seed, cell.undirected);
  }

  const ChunkHistogram hist = build_histogram(matrix);
  const PatternDictionary dict = select_patterns(hist);
  MatchCounts counts;
  const CompressedGraph compressed = compress(matrix, dict, &counts);

  Row row;
  row.cell = cell;
  row.edges = matrix.edge_count();
  row.max_possible_chunks = counts.chunks;
  row.total_matched = counts.matched();
  row.high_matched = counts.high;
  row.low_matched = counts.low;
  row.misses = counts.misses();
  row.body_bits = compressed.body_bits;
  row.raw_bits = cell.nodes * cell.nodes;
  row.file_bytes = write_container(compressed).size();
  row.reduction = 1.0 - static_cast<double>(row.body_bits) / static_cast<double>(row.raw_bits);
  row.file_reduction = 1.0 - static_cast<double>(row.file_bytes * 8) / static_cast<double>(row.raw_bits);
  row.high_dominates_low = groups_ordered(hist, dict);
  row.round_trip_ok = !verify_round_trip || decompress(compressed) == matrix;
  return row;
}

std::vector<Row> run(const Plan& plan) {
  std::vector<Cell> cells;
  for (Model model : plan.models) {
    for (std::uint64_t v : plan.sizes) {
      for (std::uint32_t d : plan.degrees) {
        for (std::uint64_t seed : plan.seeds) cells.push_back(Cell{model, v, d, seed, plan.undirected});
      }
    }
  }
  std::vector<Row> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = run_cell(cells[i], plan.verify_round_trip);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(plan.workers, static_cast<unsigned>(cells.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_csv_header(std::ostream& out) {
  out << "model,nodes,mean_degree,seed,undirected,edges,max_possible_chunks,total_matched,high_matched,"
         "low_matched,misses,body_bits,raw_bits,file_bytes,reduction,file_reduction\n";
}

void write_csv_row(std::ostream& out, const Row& r) {
  out << model_name(r.cell.model) << ',' << r.cell.nodes << ',' << r.cell.mean_degree << ',' << r.cell.seed << ','
      << (r.cell.undirected ? 1 : 0) << ',' << r.edges << ',' << r.max_possible_chunks << ',' << r.total_matched
      << ',' << r.high_matched << ',' << r.low_matched << ',' << r.misses << ',' << r.body_bits << ','
      << r.raw_bits << ',' << r.file_bytes << ',' << std::fixed << std::setprecision(6) << r.reduction << ','
      << r.file_reduction << '\n';
  out.unsetf(std::ios::floatfield);
}

}  // namespace hgc::bench
