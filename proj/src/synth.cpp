#include "hgc/synth.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hgc/error.hpp"

namespace hgc::synth {
namespace {

__extension__ using Wide = unsigned __int128;

// Fenwick tree over per-node sampling weights.
class WeightTree {
 public:
  explicit WeightTree(std::size_t n) : tree_(n + 1, 0), top_bit_(1) {
    while (top_bit_ * 2 <= n) top_bit_ *= 2;
  }

  void add(std::size_t index, std::int64_t delta) {
    total_ += delta;
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  std::uint64_t total() const { return static_cast<std::uint64_t>(total_); }

  // Smallest index whose inclusive prefix sum exceeds `target`.
  std::size_t find(std::uint64_t target) const {
    std::size_t pos = 0;
    auto rest = static_cast<std::int64_t>(target);
    for (std::size_t step = top_bit_; step != 0; step /= 2) {
      const std::size_t next = pos + step;
      if (next < tree_.size() && tree_[next] <= rest) {
        pos = next;
        rest -= tree_[next];
      }
    }
    return pos;
  }

 private:
  std::vector<std::int64_t> tree_;
  std::size_t top_bit_;
  std::int64_t total_ = 0;
};

}  // namespace

double uniform01(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  Wide product = static_cast<Wide>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<Wide>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

AdjacencyMatrix gen_erdos_renyi(std::uint64_t nodes, double p, std::uint64_t seed, bool undirected) {
  if (nodes == 0) throw ContractError("gen_erdos_renyi: node count must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError("gen_erdos_renyi: p must lie in [0, 1]");
  Engine rng(seed);
  AdjacencyMatrix m(nodes);
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId w = undirected ? u + 1 : 0; w < nodes; ++w) {
      if (w == u) continue;
      if (uniform01(rng) < p) {
        m.set(u, w);
        if (undirected) m.set(w, u);
      }
    }
  }
  return m;
}

AdjacencyMatrix gen_power_law(std::uint64_t nodes, std::uint64_t edges_target, std::uint64_t seed,
                              bool undirected) {
  if (nodes == 0) throw ContractError("gen_power_law: node count must be at least 1");
  if (edges_target > nodes * (nodes - 1) / 2) {
    throw ContractError("gen_power_law: " + std::to_string(edges_target) + " edges do not fit in " +
                        std::to_string(nodes) + " nodes");
  }
  const std::uint64_t per_node = (edges_target + nodes - 1) / nodes;
  Engine rng(seed);
  AdjacencyMatrix m(nodes);
  WeightTree weights(static_cast<std::size_t>(nodes));
  std::vector<std::int64_t> degree(static_cast<std::size_t>(nodes), 0);
  weights.add(0, 1);

  std::vector<std::size_t> picked;
  for (std::size_t i = 1; i < nodes; ++i) {
    const std::uint64_t want = std::min<std::uint64_t>(per_node, i);
    picked.clear();
    // Without replacement: a target's weight stays zero until node i is done.
    for (std::uint64_t k = 0; k < want; ++k) {
      const std::size_t t = weights.find(uniform_below(rng, weights.total()));
      picked.push_back(t);
      weights.add(t, -(degree[t] + 1));
    }
    for (std::size_t t : picked) {
      m.set(i, t);
      if (undirected) m.set(t, i);
      ++degree[t];
      weights.add(t, degree[t] + 1);
    }
    degree[i] = static_cast<std::int64_t>(want);
    weights.add(i, degree[i] + 1);
  }
  return m;
}

}  // namespace hgc::synth
