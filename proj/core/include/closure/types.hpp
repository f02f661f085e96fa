#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace closure {

/// Dense node identifier, 0..node_count-1 after ingestion.
using NodeId = std::uint32_t;

/// Raw node identifier as it appears in the input files.
using RawNodeId = std::uint64_t;

/// Position of an interaction in SimplicialDataset::interactions.
using InteractionIndex = std::uint32_t;

using Timestamp = std::int64_t;

/// Largest simplex (node count) retained at load time.
inline constexpr std::size_t kMaxSimplexOrder = 25;

/// Thrown when a dataset cannot be read or is internally inconsistent.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an evaluation cannot produce a meaningful result
/// (empty windows, degenerate label sets, candidate limit exceeded).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered node pair packed as (min << 32) | max.
using EdgeKey = std::uint64_t;

constexpr EdgeKey edge_key(NodeId a, NodeId b) noexcept {
  if (a > b) {
    NodeId t = a;
    a = b;
    b = t;
  }
  return (static_cast<EdgeKey>(a) << 32) | static_cast<EdgeKey>(b);
}

constexpr NodeId edge_first(EdgeKey e) noexcept { return static_cast<NodeId>(e >> 32); }
constexpr NodeId edge_second(EdgeKey e) noexcept {
  return static_cast<NodeId>(e & 0xffffffffu);
}

}  // namespace closure
