#pragma once

#include <initializer_list>
#include <vector>

#include "closure/dataset.hpp"

namespace closure::testing {

inline SimplicialDataset make_dataset(
    std::initializer_list<std::pair<std::vector<RawNodeId>, Timestamp>> records,
    std::string name = "toy") {
  std::vector<RawInteraction> raw;
  for (const auto& [nodes, t] : records) raw.push_back(RawInteraction{nodes, t});
  return normalize_dataset(std::move(name), std::move(raw));
}

// The running example: a 4-node interaction at t1, (3,5,6) at t2, the
// (4,5) contact that opens the (3,4,5) triangle at t3, the two contacts
// that open (2,3,7) at t4, and the closure of (3,4,5) at t5. Raw ids equal
// the labels 1..7, dense ids are label - 1.
inline SimplicialDataset running_example() {
  return make_dataset({{{1, 2, 3, 4}, 1},
                       {{3, 5, 6}, 2},
                       {{4, 5}, 3},
                       {{2, 7}, 4},
                       {{3, 7}, 4},
                       {{3, 4, 5}, 5}},
                      "running-example");
}

// Dense id of a running-example label.
constexpr NodeId node(RawNodeId label) { return static_cast<NodeId>(label - 1); }

}  // namespace closure::testing
