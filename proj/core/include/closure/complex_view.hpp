#pragma once

#include <span>
#include <vector>

#include "closure/dataset.hpp"
#include "closure/types.hpp"

namespace closure {

/// Compressed rows: row r is values[offsets[r] .. offsets[r+1]).
template <typename T>
struct CsrRows {
  std::vector<std::size_t> offsets{0};
  std::vector<T> values;

  std::size_t rows() const noexcept { return offsets.size() - 1; }
  std::span<const T> row(std::size_t r) const noexcept {
    return {values.data() + offsets[r], offsets[r + 1] - offsets[r]};
  }
};

/// Half-open range of interaction indices.
struct Window {
  InteractionIndex begin = 0;
  InteractionIndex end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
};

/// Read-only structure over a window of a dataset: skeleton adjacency,
/// degrees and a per-node index of the interactions containing each node.
///
/// Holds a reference to the dataset, which must outlive the view.
class ComplexView {
 public:
  ComplexView(const SimplicialDataset& ds, Window window, unsigned threads = 1);

  const SimplicialDataset& dataset() const noexcept { return *ds_; }
  Window window() const noexcept { return window_; }
  std::size_t node_count() const noexcept { return degrees_.size(); }

  /// Skeleton neighbours of v, ascending.
  std::span<const NodeId> neighbors(NodeId v) const noexcept { return adjacency_.row(v); }
  std::size_t degree(NodeId v) const noexcept { return degrees_[v]; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  bool adjacent(NodeId a, NodeId b) const noexcept;
  std::size_t edge_count() const noexcept { return adjacency_.values.size() / 2; }

  /// Window interactions containing v, ascending.
  std::span<const InteractionIndex> interactions_of(NodeId v) const noexcept {
    return incidence_.row(v);
  }
  const Interaction& interaction(InteractionIndex i) const noexcept {
    return ds_->interactions[i];
  }

  /// True iff some window interaction contains every node of `nodes`.
  /// `nodes` must be ascending and non-empty.
  bool is_closed(std::span<const NodeId> nodes) const;

  /// Ascending indices of window interactions that contain all of `nodes`.
  std::vector<InteractionIndex> interactions_containing(std::span<const NodeId> nodes) const;

 private:
  const SimplicialDataset* ds_;
  Window window_;
  CsrRows<NodeId> adjacency_;
  std::vector<std::size_t> degrees_;
  CsrRows<InteractionIndex> incidence_;
};

/// View over the first floor(train_fraction * |interactions|) interactions.
/// Throws EvalError when the window would be empty or the fraction is
/// outside (0, 1).
ComplexView build_view(const SimplicialDataset& ds, double train_fraction, unsigned threads = 1);

/// Number of interactions in the training window for a fraction.
InteractionIndex training_window_end(std::size_t interaction_count, double train_fraction);

/// Sorted intersection of two ascending sequences.
template <typename T>
std::vector<T> intersect_sorted(std::span<const T> a, std::span<const T> b);

}  // namespace closure

#include "closure/detail/intersect.hpp"
