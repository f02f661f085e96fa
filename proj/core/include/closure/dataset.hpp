#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closure/types.hpp"

namespace closure {

/// One timestamped simplex. Nodes are dense ids, strictly ascending.
struct Interaction {
  std::vector<NodeId> nodes;
  Timestamp time = 0;

  std::size_t order() const noexcept { return nodes.size(); }
  bool contains(NodeId v) const noexcept;
  /// True if every element of `sorted_subset` (ascending) is in this simplex.
  bool contains_all(std::span<const NodeId> sorted_subset) const noexcept;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

/// A raw record before validation: node ids exactly as read.
struct RawInteraction {
  std::vector<RawNodeId> nodes;
  Timestamp time = 0;
};

struct SimplicialDataset {
  std::string name;
  /// Sorted by time; ties keep input order.
  std::vector<Interaction> interactions;
  std::size_t node_count = 0;
  /// raw_ids[dense] is the identifier used in the source files.
  std::vector<RawNodeId> raw_ids;
  std::size_t dropped_oversize = 0;
  std::size_t dropped_degenerate = 0;

  std::size_t size() const noexcept { return interactions.size(); }
  bool empty() const noexcept { return interactions.empty(); }

  RawNodeId raw_id(NodeId dense) const { return raw_ids.at(dense); }
  /// Dense id for a raw id, if that node survived filtering.
  std::optional<NodeId> dense_id(RawNodeId raw) const;

  friend bool operator==(const SimplicialDataset&, const SimplicialDataset&) = default;
};

/// Validates, filters and re-indexes raw records.
///
/// Records with repeated nodes or no nodes are dropped as degenerate;
/// records with more than kMaxSimplexOrder distinct nodes are dropped as
/// oversize. Survivors are stably sorted by timestamp and node ids are
/// mapped to 0..n-1 in ascending raw-id order.
SimplicialDataset normalize_dataset(std::string name, std::vector<RawInteraction> records);

/// Reads `<name>-nverts.txt`, `<name>-simplices.txt` and `<name>-times.txt`
/// from `directory`. Throws LoadError on missing files, malformed tokens
/// (with the offending line number) or length mismatches.
SimplicialDataset load_dataset(const std::filesystem::path& directory, const std::string& name);

/// Writes the three-file representation using raw node ids, in the
/// dataset's (time-sorted) order.
void write_dataset(const std::filesystem::path& directory, const SimplicialDataset& ds);

struct StatsRecord {
  std::size_t nodes = 0;
  std::size_t skeleton_edges = 0;
  std::size_t simplices = 0;

  friend bool operator==(const StatsRecord&, const StatsRecord&) = default;
};

StatsRecord dataset_stats(const SimplicialDataset& ds, unsigned threads = 1);

}  // namespace closure
