#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "closure/complex_view.hpp"

namespace closure {

/// Fixed-arity list of node sets stored contiguously; set i occupies
/// nodes[i*k .. i*k+k) in ascending order.
class NodeSetList {
 public:
  NodeSetList() = default;
  explicit NodeSetList(std::size_t k) : k_(k) {}

  std::size_t arity() const noexcept { return k_; }
  std::size_t size() const noexcept { return k_ == 0 ? 0 : nodes_.size() / k_; }
  bool empty() const noexcept { return nodes_.empty(); }

  std::span<const NodeId> operator[](std::size_t i) const noexcept {
    return {nodes_.data() + i * k_, k_};
  }
  void push_back(std::span<const NodeId> set) { nodes_.insert(nodes_.end(), set.begin(), set.end()); }
  void append(const NodeSetList& other) {
    nodes_.insert(nodes_.end(), other.nodes_.begin(), other.nodes_.end());
  }
  void reserve(std::size_t n) { nodes_.reserve(n * k_); }

  /// Sorts the sets lexicographically.
  void sort();

  const std::vector<NodeId>& flat() const noexcept { return nodes_; }

  friend bool operator==(const NodeSetList&, const NodeSetList&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<NodeId> nodes_;
};

struct CliquePartition {
  NodeSetList closed;
  NodeSetList open;
};

/// Open k-cliques of a training window. labels stays empty until
/// label_candidates fills it.
struct CandidateSet {
  std::size_t k = 0;
  NodeSetList candidates;
  std::vector<std::uint8_t> labels;

  std::size_t size() const noexcept { return candidates.size(); }
};

/// Ranks nodes by (degree, id) ascending; rank[v] is v's position.
std::vector<NodeId> degree_ordering(const ComplexView& view);

/// Visits every k-clique of the skeleton once, for k in {2, 3, 4}.
/// Node sets passed to `visit` are ascending; visiting order follows the
/// degree ordering, not lexicographic order.
void for_each_k_clique(const ComplexView& view, std::size_t k,
                       const std::function<void(std::span<const NodeId>)>& visit);

/// All k-cliques, lexicographically sorted.
NodeSetList enumerate_k_cliques(const ComplexView& view, std::size_t k, unsigned threads = 1);

struct PartitionOptions {
  unsigned threads = 1;
  bool keep_closed = true;
  bool keep_open = true;
  /// Abort with EvalError once more open cliques than this are found.
  std::size_t max_open = SIZE_MAX;
};

/// Splits all k-cliques (k in {3, 4}) into closed and open sets, each
/// lexicographically sorted.
CliquePartition partition_cliques(const ComplexView& view, std::size_t k,
                                  const PartitionOptions& options = {});

inline constexpr std::size_t kDefaultMaxCandidates = 100'000'000;

/// Open k-cliques of the view, i.e. the candidate k-simplices.
CandidateSet candidates(const ComplexView& view, std::size_t k, unsigned threads = 1,
                        std::size_t max_candidates = kDefaultMaxCandidates);

}  // namespace closure
