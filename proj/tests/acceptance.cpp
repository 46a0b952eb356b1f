// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed here and not tunable from the command line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "hgc/bench.hpp"
#include "hgc/codec.hpp"
#include "hgc/error.hpp"
#include "hgc/size_model.hpp"
#include "support.hpp"

namespace {

using namespace hgc;
using Clock = std::chrono::steady_clock;

constexpr double kMinReduction = 0.75;         // criterion 2
constexpr std::uint32_t kMaxSparseDegree = 4;  // criterion 2 sweep cells
constexpr double kChunkCountBudgetSec = 1.0;   // criterion 1
constexpr double kSweepBudgetSec = 60.0;       // criterion 2
constexpr int kFormulaCases = 200;             // criterion 3
constexpr int kRoundTripCases = 200;           // criterion 4
constexpr int kFuzzMutations = 100;            // criterion 5

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PatternDictionary random_fixed_dict(const AdjacencyMatrix& m, std::mt19937_64& rng) {
  // Mix of values that occur in the matrix and values that (almost surely) do not.
  const auto ranked = build_histogram(m).ranked();
  std::vector<std::uint32_t> pool;
  for (std::size_t i = 0; i < ranked.size() && pool.size() < 6; i += 1 + rng() % 3) pool.push_back(ranked[i].first);
  while (pool.size() < 3 + rng() % 10) {
    const auto v = static_cast<std::uint32_t>(rng());
    if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t h = std::min<std::size_t>(pool.size(), rng() % 5);
  const std::size_t l = std::min<std::size_t>(pool.size() - h, 8);
  return PatternDictionary(std::vector<std::uint32_t>(pool.begin(), pool.begin() + h),
                           std::vector<std::uint32_t>(pool.begin() + h, pool.begin() + h + l));
}

std::uint64_t histogram_mass(const ChunkHistogram& h, const std::vector<std::uint32_t>& patterns) {
  std::uint64_t s = 0;
  for (auto p : patterns) s += h.count_of(p);
  return s;
}

Outcome chunk_counts() {
  const auto start = Clock::now();
  const std::pair<std::uint64_t, std::uint64_t> expected[] = {
      {1024, 32768}, {2048, 131072}, {4096, 524288}, {8192, 2097152}};
  Outcome o;
  std::ostringstream d;
  for (const auto& [v, want] : expected) {
    const AdjacencyMatrix m(v);
    const auto got = static_cast<std::uint64_t>(m.words().size());
    const auto model = size_model::chunk_count(v, kChunkBits);
    o.pass = o.pass && got == want && model == want && v * v / 32 == want;
    d << v << "->" << got << ' ';
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < kChunkCountBudgetSec;
  d << "(" << t << " s)";
  o.detail = d.str();
  return o;
}

Outcome sweep_reduction(const std::vector<bench::Row>& rows, double elapsed) {
  Outcome o;
  std::ostringstream d;
  double worst = 1.0;
  int cells = 0;
  for (const auto& r : rows) {
    if (r.cell.mean_degree > kMaxSparseDegree) continue;
    ++cells;
    worst = std::min(worst, r.reduction);
    if (r.reduction < kMinReduction || !r.round_trip_ok) o.pass = false;
    if (r.cell.model == bench::Model::kErdosRenyi) {
      // Analytic expectation under G(v, p): zero chunks cost 4 bits, the
      // rest are bounded above by 33.
      const double p = static_cast<double>(r.cell.mean_degree) / static_cast<double>(r.cell.nodes - 1);
      const double zero = std::pow(1.0 - p, 32);
      const double bound = 1.0 - (4.0 * zero + 33.0 * (1.0 - zero)) / 32.0;
      d << "\n      er v=" << r.cell.nodes << " d=" << r.cell.mean_degree << " measured=" << r.reduction
        << " analytic>=" << bound;
      if (r.reduction + 1e-9 < bound) o.pass = false;
    } else {
      d << "\n      pl v=" << r.cell.nodes << " d=" << r.cell.mean_degree << " measured=" << r.reduction;
    }
  }
  o.pass = o.pass && cells == 16 && elapsed < kSweepBudgetSec;
  std::ostringstream head;
  head << cells << " cells, worst reduction " << worst << ", sweep " << elapsed << " s";
  o.detail = head.str() + d.str();
  return o;
}

Outcome formula_exactness() {
  std::mt19937_64 rng(3003);
  const std::uint64_t sizes[] = {1, 17, 31, 32, 33, 64, 100, 257};
  const double densities[] = {0.0, 0.002, 0.02, 0.1, 0.5, 1.0};
  Outcome o;
  int checked = 0;
  for (int i = 0; i < kFormulaCases; ++i) {
    const auto m = testing::random_matrix(sizes[rng() % 8], densities[rng() % 6], rng(), rng() % 2);
    const PatternDictionary dict = i % 2 ? random_fixed_dict(m, rng) : select_patterns(build_histogram(m));
    MatchCounts counts;
    const auto c = compress(m, dict, &counts);
    // m_h and m_l again, independently, from the histogram.
    const auto hist = build_histogram(m);
    const std::uint64_t m_h = histogram_mass(hist, dict.high());
    const std::uint64_t m_l = histogram_mass(hist, dict.low());
    const std::uint64_t chunks = chunk_count(m.nodes());
    const size_model::TwoGroupInputs in{
        .high_matches = m_h, .low_matches = m_l, .matches = m_h + m_l, .nodes = m.nodes()};
    const bool ok = counts.high == m_h && counts.low == m_l &&
                    c.body_bits == 4 * m_h + 5 * m_l + 33 * (chunks - m_h - m_l) &&
                    c.body_bits == size_model::two_group_size_corrected(in) &&
                    c.body_bits - size_model::two_group_size_literal(in) == m_h + m_l;
    if (!ok) o.pass = false;
    ++checked;
  }
  o.detail = std::to_string(checked) + " random cases";
  return o;
}

struct Case {
  AdjacencyMatrix matrix;
  CompressedGraph compressed;
};

Outcome lossless_round_trip(std::vector<Case>& keep) {
  std::mt19937_64 rng(4004);
  const std::uint64_t sizes[] = {17, 32, 33, 64, 1024};
  const double densities[] = {0.0, 0.001, 0.01, 0.1, 1.0};
  Outcome o;
  int cases = 0;
  for (int seed = 0; cases < kRoundTripCases; ++seed) {
    for (std::uint64_t v : sizes) {
      for (double p : densities) {
        for (int fixed = 0; fixed < 2; ++fixed) {
          for (int undirected = 0; undirected < 2; ++undirected) {
            const auto m = testing::random_matrix(v, p, rng(), undirected != 0);
            const PatternDictionary dict = fixed ? random_fixed_dict(m, rng) : select_patterns(build_histogram(m));
            const auto c = compress(m, dict);
            if (decompress(c) != m) o.pass = false;
            if (keep.size() < 40 && v <= 64) keep.push_back({m, c});
            ++cases;
          }
        }
      }
    }
  }
  o.detail = std::to_string(cases) + " matrices, v in {17,32,33,64,1024}, 5 densities, adaptive+fixed, directed+undirected";
  return o;
}

Outcome container_integrity(const std::vector<Case>& cases) {
  Outcome o;
  for (const auto& c : cases) {
    const auto bytes = write_container(c.compressed);
    if (std::string(bytes.begin(), bytes.begin() + 4) != "HGC1") o.pass = false;
    if (read_container(bytes) != c.compressed) o.pass = false;
  }
  std::mt19937_64 rng(5005);
  int rejected = 0, identical = 0, silent_wrong = 0, mutations = 0;
  for (int i = 0; i < kFuzzMutations * 5; ++i) {
    const Case& c = cases[rng() % cases.size()];
    auto bytes = write_container(c.compressed);
    const int edits = 1 + static_cast<int>(rng() % (i % 5 == 4 ? 4 : 1));
    for (int e = 0; e < edits; ++e) {
      const std::size_t at = rng() % bytes.size();
      bytes[at] = static_cast<std::uint8_t>(bytes[at] ^ (1 + rng() % 255));
    }
    ++mutations;
    try {
      if (decompress(read_container(bytes)) == c.matrix) {
        ++identical;
      } else {
        ++silent_wrong;
      }
    } catch (const CorruptContainerError&) {
      ++rejected;
    }
  }
  o.pass = o.pass && silent_wrong == 0 && mutations >= kFuzzMutations;
  o.detail = std::to_string(cases.size()) + " round trips; " + std::to_string(mutations) + " mutations: " +
             std::to_string(rejected) + " rejected, " + std::to_string(identical) + " identical, " +
             std::to_string(silent_wrong) + " silently wrong";
  return o;
}

Outcome group_ordering(const std::vector<bench::Row>& rows) {
  Outcome o;
  int full = 0;
  for (const auto& r : rows) {
    if (!r.high_dominates_low) o.pass = false;
    if (r.high_matched >= r.low_matched) ++full;
  }
  o.detail = std::to_string(rows.size()) + " bench cells; high_matched >= low_matched in " + std::to_string(full);
  return o;
}

Outcome worst_case_bound() {
  std::mt19937_64 rng(7007);
  Outcome o;
  int cases = 0;
  for (std::uint64_t v : {1u, 17u, 32u, 33u, 64u, 500u}) {
    for (double p : {0.0, 0.05, 1.0}) {
      const auto m = testing::random_matrix(v, p, rng());
      const auto hist = build_histogram(m);
      std::vector<std::uint32_t> absent;
      while (absent.size() < 12) {
        const auto x = static_cast<std::uint32_t>(rng());
        if (hist.count_of(x) == 0 && std::find(absent.begin(), absent.end(), x) == absent.end()) absent.push_back(x);
      }
      const PatternDictionary dict(std::vector<std::uint32_t>(absent.begin(), absent.begin() + 4),
                                   std::vector<std::uint32_t>(absent.begin() + 4, absent.end()));
      const auto c = compress(m, dict);
      const std::uint64_t chunks = chunk_count(v);
      if (c.body_bits != 33 * chunks || c.body_bits != size_model::uniform_size(16, v, 32, 0)) o.pass = false;
      if (decompress(c) != m) o.pass = false;
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " matrices with disjoint dictionaries, body_bits == 33 * chunks";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](const char* id, const char* name, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };

  report("AC1", "chunk-count reproduction", chunk_counts);

  bench::Plan plan;
  plan.workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<bench::Row> rows;
  const auto sweep_start = Clock::now();
  double sweep_seconds = 0;
  try {
    rows = bench::run(plan);
    sweep_seconds = seconds_since(sweep_start);
  } catch (const std::exception& e) {
    std::printf("bench sweep failed: %s\n", e.what());
  }
  report("AC2", "compression-ratio reproduction", [&] { return sweep_reduction(rows, sweep_seconds); });
  report("AC3", "bitstream/formula exactness", formula_exactness);
  std::vector<Case> kept;
  report("AC4", "lossless round trip", [&] { return lossless_round_trip(kept); });
  report("AC5", "container round trip and corruption fuzzing", [&] { return container_integrity(kept); });
  report("AC6", "high/low group ordering on bench cells", [&] { return group_ordering(rows); });
  report("AC7", "worst-case bound", worst_case_bound);

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
