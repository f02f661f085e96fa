#include "closure/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace closure {

SimplicialDataset generate_synthetic(const SyntheticParams& params) {
  if (params.max_order < 2 || params.nodes < params.max_order) {
    throw std::invalid_argument("synthetic data needs nodes >= max_order >= 2");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> size_dist(2, params.max_order);
  std::uniform_int_distribution<int> gap_dist(1, 3);

  std::vector<RawNodeId> universe(params.nodes);
  std::iota(universe.begin(), universe.end(), RawNodeId{0});

  std::vector<RawInteraction> records(params.interactions);
  Timestamp t = 0;
  for (auto& rec : records) {
    t += gap_dist(rng);
    rec.time = t;
    // Partial Fisher-Yates: the first `g` slots become a uniform sample.
    const std::size_t g = size_dist(rng);
    for (std::size_t i = 0; i < g; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, universe.size() - 1);
      std::swap(universe[i], universe[pick(rng)]);
    }
    rec.nodes.assign(universe.begin(), universe.begin() + static_cast<std::ptrdiff_t>(g));
  }
  return normalize_dataset("synthetic-" + std::to_string(params.seed), std::move(records));
}

}  // namespace closure
