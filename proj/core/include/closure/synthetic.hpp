#pragma once

#include <cstdint>

#include "closure/dataset.hpp"

namespace closure {

struct SyntheticParams {
  std::uint64_t seed = 1;
  std::size_t nodes = 10;
  std::size_t interactions = 50;
  std::size_t max_order = 4;
};

/// Reproducible random dataset: each interaction draws a size uniformly
/// from [2, max_order] and that many distinct nodes uniformly from
/// [0, nodes). Timestamps increase by 1..3 per record.
SimplicialDataset generate_synthetic(const SyntheticParams& params);

}  // namespace closure
