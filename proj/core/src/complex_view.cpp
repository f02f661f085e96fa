#include "closure/complex_view.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace closure {

ComplexView::ComplexView(const SimplicialDataset& ds, Window window, unsigned threads)
    : ds_(&ds), window_(window) {
  if (window.begin > window.end || window.end > ds.interactions.size()) {
    throw std::out_of_range("window exceeds dataset");
  }
  const std::size_t n = ds.node_count;

  // Per-node interaction index, counting pass then fill. Indices are
  // visited in ascending order so every row is sorted.
  incidence_.offsets.assign(n + 1, 0);
  for (InteractionIndex i = window.begin; i < window.end; ++i) {
    for (NodeId v : ds.interactions[i].nodes) ++incidence_.offsets[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) incidence_.offsets[v + 1] += incidence_.offsets[v];
  incidence_.values.resize(incidence_.offsets[n]);
  {
    std::vector<std::size_t> cursor(incidence_.offsets.begin(), incidence_.offsets.end() - 1);
    for (InteractionIndex i = window.begin; i < window.end; ++i) {
      for (NodeId v : ds.interactions[i].nodes) incidence_.values[cursor[v]++] = i;
    }
  }

  // Skeleton neighbours: union of co-members over each node's interactions.
  std::vector<std::vector<NodeId>> rows(n);
  detail::parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<NodeId> scratch;
    for (std::size_t v = begin; v < end; ++v) {
      scratch.clear();
      for (InteractionIndex i : incidence_.row(v)) {
        for (NodeId u : ds.interactions[i].nodes) {
          if (u != v) scratch.push_back(u);
        }
      }
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
      rows[v].assign(scratch.begin(), scratch.end());
    }
  });

  adjacency_.offsets.assign(n + 1, 0);
  degrees_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    degrees_[v] = rows[v].size();
    adjacency_.offsets[v + 1] = adjacency_.offsets[v] + rows[v].size();
  }
  adjacency_.values.reserve(adjacency_.offsets[n]);
  for (auto& row : rows) {
    adjacency_.values.insert(adjacency_.values.end(), row.begin(), row.end());
    std::vector<NodeId>().swap(row);
  }
}

bool ComplexView::adjacent(NodeId a, NodeId b) const noexcept {
  if (a >= node_count() || b >= node_count()) return false;
  if (degrees_[a] > degrees_[b]) std::swap(a, b);
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

namespace {

NodeId sparsest_node(const ComplexView& view, std::span<const NodeId> nodes) {
  NodeId best = nodes.front();
  for (NodeId v : nodes) {
    if (view.interactions_of(v).size() < view.interactions_of(best).size()) best = v;
  }
  return best;
}

void check_nodes(const ComplexView& view, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw std::invalid_argument("node set must be non-empty");
  for (NodeId v : nodes) {
    if (v >= view.node_count()) throw std::out_of_range("node id out of range");
  }
}

}  // namespace

bool ComplexView::is_closed(std::span<const NodeId> nodes) const {
  check_nodes(*this, nodes);
  for (InteractionIndex i : interactions_of(sparsest_node(*this, nodes))) {
    if (ds_->interactions[i].contains_all(nodes)) return true;
  }
  return false;
}

std::vector<InteractionIndex> ComplexView::interactions_containing(
    std::span<const NodeId> nodes) const {
  check_nodes(*this, nodes);
  std::vector<InteractionIndex> out;
  if (nodes.size() == 2) {
    detail::intersect_into(interactions_of(nodes[0]), interactions_of(nodes[1]), out);
    return out;
  }
  for (InteractionIndex i : interactions_of(sparsest_node(*this, nodes))) {
    if (ds_->interactions[i].contains_all(nodes)) out.push_back(i);
  }
  return out;
}

InteractionIndex training_window_end(std::size_t interaction_count, double train_fraction) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw EvalError("train_fraction must lie in (0, 1), got " + std::to_string(train_fraction));
  }
  // The epsilon absorbs binary representation error of decimal fractions
  // such as 0.57 * 100 = 56.99999999999999.
  const double scaled = train_fraction * static_cast<double>(interaction_count);
  return static_cast<InteractionIndex>(std::floor(scaled + 1e-9));
}

ComplexView build_view(const SimplicialDataset& ds, double train_fraction, unsigned threads) {
  const InteractionIndex end = training_window_end(ds.size(), train_fraction);
  if (end == 0) throw EvalError("training window empty for dataset '" + ds.name + "'");
  return ComplexView(ds, Window{0, end}, threads);
}

}  // namespace closure
