#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "hgc/bench.hpp"
#include "hgc/codec.hpp"
#include "hgc/edge_list.hpp"
#include "hgc/error.hpp"
#include "hgc/patterns.hpp"
#include "hgc/size_model.hpp"
#include "hgc/synth.hpp"

namespace hgc::cli {
namespace {

struct GraphInput {
  std::string path;
  std::optional<std::uint64_t> nodes;
  bool undirected = false;
  bool one_indexed = false;
  std::string dict_path;

  void attach(CLI::App& cmd) {
    cmd.add_option("input", path, "Edge-list file")->required();
    cmd.add_option("--nodes", nodes, "Node count (overrides an 'n <v>' header)");
    cmd.add_flag("--undirected", undirected, "Mirror every edge");
    cmd.add_flag("--one-indexed", one_indexed, "Node indices in the file start at 1");
    cmd.add_option("--dict", dict_path, "Fixed dictionary file (hex patterns, high group first)");
  }

  AdjacencyMatrix load() const {
    return load_matrix(read_edge_list(path, one_indexed), nodes, undirected);
  }

  PatternDictionary dictionary_for(const AdjacencyMatrix& matrix, ChunkHistogram* hist_out = nullptr) const {
    ChunkHistogram hist = build_histogram(matrix);
    PatternDictionary dict = dict_path.empty() ? select_patterns(hist) : read_dictionary(dict_path);
    if (hist_out != nullptr) *hist_out = std::move(hist);
    return dict;
  }
};

// Writes to `path`, or to `fallback` when path is empty or "-".
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot create " + path);
  fn(file);
  file.flush();
  if (!file) throw IoError("write failed for " + path);
}

std::string percent(double fraction) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << 100.0 * fraction << '%';
  return s.str();
}

std::string hex32(std::uint32_t value) {
  std::ostringstream s;
  s << "0x" << std::hex << std::setw(8) << std::setfill('0') << value;
  return s.str();
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-tier pattern-identifier compression for graph adjacency matrices", "hgc"};
  app.require_subcommand(1);

  // compress
  GraphInput compress_in;
  std::string compress_out;
  auto* compress_cmd = app.add_subcommand("compress", "Compress an edge list into a container");
  compress_in.attach(*compress_cmd);
  compress_cmd->add_option("--out", compress_out, "Container path")->required();

  // decompress
  std::string decompress_in;
  std::string decompress_out;
  auto* decompress_cmd = app.add_subcommand("decompress", "Expand a container back into an edge list");
  decompress_cmd->add_option("input", decompress_in, "Container file")->required();
  decompress_cmd->add_option("--out", decompress_out, "Edge-list path (default stdout)");

  // analyze
  GraphInput analyze_in;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Chunk-frequency CSV with dictionary groups");
  analyze_in.attach(*analyze_cmd);
  analyze_cmd->add_option("--out", analyze_out, "CSV path (default stdout)");

  // predict
  GraphInput predict_in;
  std::string predict_out;
  std::string predict_format = "text";
  std::uint32_t uniform_n = 16;
  auto* predict_cmd = app.add_subcommand("predict", "Analytic size predictions next to the measured size");
  predict_in.attach(*predict_cmd);
  predict_cmd->add_option("--out", predict_out, "Report path (default stdout)");
  predict_cmd->add_option("--format", predict_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  predict_cmd->add_option("--uniform-n", uniform_n, "Pattern count for the single-group model (power of two)");

  // gen
  std::string gen_model = "pl";
  std::uint64_t gen_nodes = 0;
  double gen_degree = 4.0;
  std::optional<double> gen_p;
  std::uint64_t gen_seed = 1;
  bool gen_undirected = false;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic graph as an edge list");
  gen_cmd->add_option("--model", gen_model, "er (Erdos-Renyi) or pl (preferential attachment)")
      ->check(CLI::IsMember({"er", "pl"}));
  gen_cmd->add_option("--nodes", gen_nodes, "Node count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--degree", gen_degree, "Expected mean degree")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--p", gen_p, "Edge probability for er (overrides --degree)");
  gen_cmd->add_option("--seed", gen_seed, "PRNG seed");
  gen_cmd->add_flag("--undirected", gen_undirected, "Generate an undirected graph");
  gen_cmd->add_option("--out", gen_out, "Edge-list path (default stdout)");

  // bench
  bench::Plan plan;
  std::vector<std::string> bench_models{"er", "pl"};
  std::string bench_out;
  bool bench_directed = false;
  bool bench_no_verify = false;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep synthetic graphs and report pattern counts and reduction");
  bench_cmd->add_option("--sizes", plan.sizes, "Node counts")->delimiter(',');
  bench_cmd->add_option("--degrees", plan.degrees, "Mean degrees")->delimiter(',');
  bench_cmd->add_option("--seeds", plan.seeds, "Seeds")->delimiter(',');
  bench_cmd->add_option("--models", bench_models, "Graph models (er, pl)")->delimiter(',');
  bench_cmd->add_option("--workers", plan.workers, "Concurrent cells")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--directed", bench_directed, "Generate directed graphs");
  bench_cmd->add_flag("--no-verify", bench_no_verify, "Skip the decompress check per cell");
  bench_cmd->add_option("--out", bench_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*compress_cmd) {
    const AdjacencyMatrix matrix = compress_in.load();
    const PatternDictionary dict = compress_in.dictionary_for(matrix);
    MatchCounts counts;
    const CompressedGraph compressed = compress(matrix, dict, &counts);
    const auto bytes = write_container(compressed);
    save_container(compress_out, compressed);
    const double raw = static_cast<double>(matrix.nodes()) * static_cast<double>(matrix.nodes());
    out << "nodes=" << matrix.nodes() << " raw_bits=" << matrix.nodes() * matrix.nodes()
        << " body_bits=" << compressed.body_bits
        << " reduction=" << percent(1.0 - static_cast<double>(compressed.body_bits) / raw)
        << " file_bytes=" << bytes.size()
        << " file_reduction=" << percent(1.0 - static_cast<double>(bytes.size() * 8) / raw)
        << " high=" << counts.high << " low=" << counts.low << " miss=" << counts.misses() << '\n';
  } else if (*decompress_cmd) {
    const AdjacencyMatrix matrix = decompress(load_container(decompress_in));
    with_output(decompress_out, out, [&](std::ostream& s) { write_edge_list(s, matrix); });
  } else if (*analyze_cmd) {
    const AdjacencyMatrix matrix = analyze_in.load();
    ChunkHistogram hist;
    const PatternDictionary dict = analyze_in.dictionary_for(matrix, &hist);
    with_output(analyze_out, out, [&](std::ostream& s) {
      s << "pattern_hex,count,group\n";
      for (const auto& [value, count] : hist.ranked()) {
        const Classification c = classify(dict, value);
        const char* group = std::holds_alternative<HighMatch>(c)  ? "high"
                            : std::holds_alternative<LowMatch>(c) ? "low"
                                                                  : "unselected";
        s << hex32(value) << ',' << count << ',' << group << '\n';
      }
      // Fixed-dictionary patterns that never occur still get a row.
      for (const auto* grp : {&dict.high(), &dict.low()}) {
        for (std::uint32_t p : *grp) {
          if (hist.count_of(p) == 0) s << hex32(p) << ",0," << (grp == &dict.high() ? "high" : "low") << '\n';
        }
      }
    });
  } else if (*predict_cmd) {
    const AdjacencyMatrix matrix = predict_in.load();
    const PatternDictionary dict = predict_in.dictionary_for(matrix);
    MatchCounts counts;
    const CompressedGraph compressed = compress(matrix, dict, &counts);
    const auto report = size_model::make_report(matrix.nodes(), counts, compressed.body_bits, uniform_n);
    with_output(predict_out, out, [&](std::ostream& s) {
      if (predict_format == "csv") {
        size_model::write_report_csv(s, report);
      } else {
        size_model::write_report_text(s, report);
      }
    });
  } else if (*gen_cmd) {
    AdjacencyMatrix matrix;
    if (gen_model == "er") {
      const double p = gen_p ? *gen_p
                       : gen_nodes > 1 ? std::min(1.0, gen_degree / static_cast<double>(gen_nodes - 1))
                                       : 0.0;
      matrix = synth::gen_erdos_renyi(gen_nodes, p, gen_seed, gen_undirected);
    } else {
      const auto target = static_cast<std::uint64_t>(gen_degree * static_cast<double>(gen_nodes) / 2.0);
      matrix = synth::gen_power_law(gen_nodes, target, gen_seed, gen_undirected);
    }
    with_output(gen_out, out, [&](std::ostream& s) {
      s << "# model=" << gen_model << " seed=" << gen_seed << (gen_undirected ? " undirected" : " directed") << '\n';
      write_edge_list(s, matrix, gen_undirected);
    });
  } else if (*bench_cmd) {
    plan.models.clear();
    for (const auto& m : bench_models) plan.models.push_back(bench::parse_model(m));
    plan.undirected = !bench_directed;
    plan.verify_round_trip = !bench_no_verify;
    const auto rows = bench::run(plan);
    with_output(bench_out, out, [&](std::ostream& s) {
      bench::write_csv_header(s);
      for (const auto& row : rows) bench::write_csv_row(s, row);
    });
    for (const auto& row : rows) {
      if (!row.round_trip_ok) {
        err << "round trip failed for v=" << row.cell.nodes << " degree=" << row.cell.mean_degree << '\n';
        return kCorrupt;
      }
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const CorruptContainerError& e) {
    err << "hgc: corrupt container: " << e.what() << '\n';
    return kCorrupt;
  } catch (const ParseError& e) {
    err << "hgc: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const IoError& e) {
    err << "hgc: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const ContractError& e) {
    err << "hgc: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "hgc: " << e.what() << '\n';
    return kIoOrParse;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hgc");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hgc::cli
