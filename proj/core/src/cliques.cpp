#include "closure/cliques.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>

#include "parallel.hpp"

namespace closure {

void NodeSetList::sort() {
  const std::size_t n = size();
  if (n < 2) return;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto sa = (*this)[a];
    auto sb = (*this)[b];
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  std::vector<NodeId> sorted;
  sorted.reserve(nodes_.size());
  for (std::uint32_t i : order) {
    auto s = (*this)[i];
    sorted.insert(sorted.end(), s.begin(), s.end());
  }
  nodes_ = std::move(sorted);
}

std::vector<NodeId> degree_ordering(const ComplexView& view) {
  const std::size_t n = view.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return view.degree(a) != view.degree(b) ? view.degree(a) < view.degree(b) : a < b;
  });
  std::vector<NodeId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<NodeId>(i);
  return rank;
}

namespace {

// Skeleton with each edge oriented from lower to higher (degree, id) rank.
// Rows stay sorted by node id so they can be intersected directly.
CsrRows<NodeId> orient(const ComplexView& view) {
  const auto rank = degree_ordering(view);
  CsrRows<NodeId> out;
  const std::size_t n = view.node_count();
  out.offsets.assign(n + 1, 0);
  out.values.reserve(view.edge_count());
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : view.neighbors(v)) {
      if (rank[u] > rank[v]) out.values.push_back(u);
    }
    out.offsets[v + 1] = out.values.size();
  }
  return out;
}

void check_order(std::size_t k, std::size_t lo, std::size_t hi) {
  if (k < lo || k > hi) {
    throw std::invalid_argument("clique order " + std::to_string(k) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

template <std::size_t N>
std::span<const NodeId> canonical(std::array<NodeId, N>& set) {
  std::sort(set.begin(), set.end());
  return {set.data(), N};
}

// Enumerates cliques whose lowest-ranked node is `seed`. `emit` receives
// (anchor edge (seed, u), common out-neighbour set W, clique nodes).
struct SeedEnumerator {
  const CsrRows<NodeId>& out;
  std::vector<NodeId> common;
  std::vector<NodeId> deeper;

  template <typename OnEdge, typename OnTriangle, typename OnFour>
  void run(NodeId seed, std::size_t k, OnEdge&& on_edge, OnTriangle&& on_triangle,
           OnFour&& on_four) {
    for (NodeId u : out.row(seed)) {
      if (k == 2) {
        on_edge(seed, u);
        continue;
      }
      common.clear();
      detail::intersect_into(out.row(seed), out.row(u), common);
      if (common.empty()) continue;
      on_edge(seed, u);
      for (NodeId w : common) {
        if (k == 3) {
          on_triangle(seed, u, w);
          continue;
        }
        deeper.clear();
        detail::intersect_into(std::span<const NodeId>(common), out.row(w), deeper);
        if (deeper.empty()) continue;
        on_triangle(seed, u, w);
        for (NodeId x : deeper) on_four(seed, u, w, x);
      }
    }
  }
};

}  // namespace

void for_each_k_clique(const ComplexView& view, std::size_t k,
                       const std::function<void(std::span<const NodeId>)>& visit) {
  check_order(k, 2, 4);
  const auto out = orient(view);
  SeedEnumerator e{out, {}, {}};
  for (NodeId v = 0; v < view.node_count(); ++v) {
    e.run(
        v, k,
        [&](NodeId a, NodeId b) {
          if (k != 2) return;
          std::array<NodeId, 2> s{a, b};
          visit(canonical(s));
        },
        [&](NodeId a, NodeId b, NodeId c) {
          if (k != 3) return;
          std::array<NodeId, 3> s{a, b, c};
          visit(canonical(s));
        },
        [&](NodeId a, NodeId b, NodeId c, NodeId d) {
          std::array<NodeId, 4> s{a, b, c, d};
          visit(canonical(s));
        });
  }
}

NodeSetList enumerate_k_cliques(const ComplexView& view, std::size_t k, unsigned threads) {
  check_order(k, 2, 4);
  const auto out = orient(view);
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<NodeSetList> local(workers, NodeSetList(k));
  detail::run_workers(workers, [&](unsigned w, unsigned count) {
    SeedEnumerator e{out, {}, {}};
    auto& sink = local[w];
    for (NodeId v = w; v < view.node_count(); v += count) {
      e.run(
          v, k,
          [&](NodeId a, NodeId b) {
            if (k != 2) return;
            std::array<NodeId, 2> s{a, b};
            sink.push_back(canonical(s));
          },
          [&](NodeId a, NodeId b, NodeId c) {
            if (k != 3) return;
            std::array<NodeId, 3> s{a, b, c};
            sink.push_back(canonical(s));
          },
          [&](NodeId a, NodeId b, NodeId c, NodeId d) {
            std::array<NodeId, 4> s{a, b, c, d};
            sink.push_back(canonical(s));
          });
    }
  });
  NodeSetList all(k);
  for (const auto& part : local) all.append(part);
  all.sort();
  return all;
}

namespace {

// Marks nodes with a per-call epoch so membership tests need no clearing.
class NodeStamp {
 public:
  explicit NodeStamp(std::size_t n) : stamp_(n, 0) {}
  void next() { ++epoch_; }
  void mark(NodeId v) { stamp_[v] = epoch_; }
  bool marked(NodeId v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

}  // namespace

CliquePartition partition_cliques(const ComplexView& view, std::size_t k,
                                  const PartitionOptions& options) {
  check_order(k, 3, 4);
  const auto out = orient(view);
  const unsigned workers = detail::resolve_threads(options.threads);
  const std::size_t n = view.node_count();
  const auto& interactions = view.dataset().interactions;

  std::vector<CliquePartition> local(workers, CliquePartition{NodeSetList(k), NodeSetList(k)});
  std::atomic<std::size_t> open_total{0};

  detail::run_workers(workers, [&](unsigned w, unsigned count) {
    SeedEnumerator e{out, {}, {}};
    auto& part = local[w];
    NodeStamp co_members(n);   // nodes sharing an interaction with the anchor edge
    NodeStamp co_members3(n);  // ... with the anchor edge plus a third node
    std::vector<InteractionIndex> anchor_interactions;
    std::size_t open_pending = 0;

    auto record = [&](std::span<const NodeId> s, bool closed) {
      if (closed) {
        if (options.keep_closed) part.closed.push_back(s);
        return;
      }
      if (options.keep_open) part.open.push_back(s);
      if (++open_pending == 4096) {
        if (open_total.fetch_add(open_pending) + open_pending > options.max_open) {
          throw EvalError("open " + std::to_string(k) + "-clique count exceeds the limit of " +
                          std::to_string(options.max_open));
        }
        open_pending = 0;
      }
    };

    for (NodeId v = w; v < n; v += count) {
      e.run(
          v, k,
          [&](NodeId a, NodeId b) {
            anchor_interactions.clear();
            detail::intersect_into(view.interactions_of(a), view.interactions_of(b),
                                   anchor_interactions);
            co_members.next();
            for (InteractionIndex i : anchor_interactions) {
              for (NodeId x : interactions[i].nodes) co_members.mark(x);
            }
          },
          [&](NodeId a, NodeId b, NodeId c) {
            if (k == 3) {
              std::array<NodeId, 3> s{a, b, c};
              record(canonical(s), co_members.marked(c));
              return;
            }
            co_members3.next();
            if (!co_members.marked(c)) return;
            for (InteractionIndex i : anchor_interactions) {
              if (!interactions[i].contains(c)) continue;
              for (NodeId x : interactions[i].nodes) co_members3.mark(x);
            }
          },
          [&](NodeId a, NodeId b, NodeId c, NodeId d) {
            std::array<NodeId, 4> s{a, b, c, d};
            record(canonical(s), co_members3.marked(d));
          });
    }
    if (open_total.fetch_add(open_pending) + open_pending > options.max_open) {
      throw EvalError("open " + std::to_string(k) + "-clique count exceeds the limit of " +
                      std::to_string(options.max_open));
    }
  });

  CliquePartition result{NodeSetList(k), NodeSetList(k)};
  for (const auto& part : local) {
    result.closed.append(part.closed);
    result.open.append(part.open);
  }
  result.closed.sort();
  result.open.sort();
  return result;
}

CandidateSet candidates(const ComplexView& view, std::size_t k, unsigned threads,
                        std::size_t max_candidates) {
  PartitionOptions options;
  options.threads = threads;
  options.keep_closed = false;
  options.max_open = max_candidates;
  CandidateSet set;
  set.k = k;
  set.candidates = std::move(partition_cliques(view, k, options).open);
  return set;
}

}  // namespace closure
