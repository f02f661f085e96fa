#include "closure/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace closure {

namespace {

// e-th root taken on the mantissa after splitting off a multiple of e from
// the binary exponent: scaling x by 2^(e*q) scales the result by exactly 2^q.
double root_of(double x, std::size_t e) {
  int exp = 0;
  double m = std::frexp(x, &exp);
  const int n = static_cast<int>(e);
  int q = exp / n;
  int r = exp % n;
  if (r < 0) {
    r += n;
    --q;
  }
  m = std::ldexp(m, r);
  double root;
  if (e == 1) {
    root = m;
  } else if (e == 3) {
    root = std::cbrt(m);
  } else if (e == 6) {
    root = std::sqrt(std::cbrt(m));
  } else {
    root = std::pow(m, 1.0 / static_cast<double>(e));
  }
  return std::ldexp(root, q);
}

constexpr std::array<std::string_view, 13> kMethodNames = {
    "KCN", "KAA", "KRA", "KPA", "SWA", "SWG", "SWH",
    "SDWA", "SDWG", "SDWH", "CRWA", "CRWG", "CRWH",
};

std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

void require_edge(const ComplexView& view, NodeId a, NodeId b) {
  if (a == b || !view.adjacent(a, b)) {
    throw std::invalid_argument("(" + std::to_string(a) + ", " + std::to_string(b) +
                                ") is not a skeleton edge");
  }
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  return kMethodNames[static_cast<std::size_t>(m)];
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == name) return static_cast<Method>(i);
  }
  return std::nullopt;
}

std::string_view weight_kind_name(WeightKind kind) noexcept {
  switch (kind) {
    case WeightKind::SW: return "SW";
    case WeightKind::SDW: return "SDW";
    case WeightKind::CRW: return "CRW";
  }
  return "?";
}

std::optional<std::pair<WeightKind, CombineMode>> edge_weight_method(Method m) noexcept {
  const auto idx = static_cast<std::size_t>(m);
  if (idx < static_cast<std::size_t>(Method::SWA)) return std::nullopt;
  const auto rel = idx - static_cast<std::size_t>(Method::SWA);
  return std::pair{static_cast<WeightKind>(rel / 3), static_cast<CombineMode>(rel % 3)};
}

std::vector<NodeId> common_neighbors(const ComplexView& view, std::span<const NodeId> nodes) {
  if (nodes.empty()) return {};
  auto first = view.neighbors(nodes[0]);
  std::vector<NodeId> acc(first.begin(), first.end());
  std::vector<NodeId> next;
  for (std::size_t i = 1; i < nodes.size() && !acc.empty(); ++i) {
    next.clear();
    detail::intersect_into(std::span<const NodeId>(acc), view.neighbors(nodes[i]), next);
    acc.swap(next);
  }
  // A node is never its own neighbour, so candidate members cannot survive
  // the intersection; filter anyway for non-clique inputs.
  std::erase_if(acc, [&](NodeId z) {
    return std::find(nodes.begin(), nodes.end(), z) != nodes.end();
  });
  return acc;
}

std::size_t score_kcn(const ComplexView& view, std::span<const NodeId> nodes) {
  return common_neighbors(view, nodes).size();
}

double score_kaa(const ComplexView& view, std::span<const NodeId> nodes) {
  double s = 0.0;
  for (NodeId z : common_neighbors(view, nodes)) {
    s += 1.0 / std::log(static_cast<double>(view.degree(z)));
  }
  return s;
}

double score_kra(const ComplexView& view, std::span<const NodeId> nodes) {
  double s = 0.0;
  for (NodeId z : common_neighbors(view, nodes)) s += 1.0 / static_cast<double>(view.degree(z));
  return s;
}

double score_kpa(const ComplexView& view, std::span<const NodeId> nodes) {
  double p = 1.0;
  for (NodeId v : nodes) p *= static_cast<double>(view.degree(v));
  return p;
}

std::uint64_t sw_weight(const ComplexView& view, NodeId a, NodeId b) {
  require_edge(view, a, b);
  const std::array<NodeId, 2> e{std::min(a, b), std::max(a, b)};
  return view.interactions_containing(e).size();
}

std::uint64_t sdw_contribution(std::size_t g, std::size_t k) noexcept {
  if (g < 2) return 0;
  if (g < k) return std::uint64_t{1} << (g - 2);
  // C(g-2, k-2) k-faces through the edge, each followed by its 2^(k-2)-1
  // lower faces through the edge.
  std::uint64_t binom = 1;
  for (std::size_t i = 1; i <= k - 2; ++i) binom = binom * (g - 2 - (k - 2) + i) / i;
  return binom << (k - 2);
}

std::uint64_t sdw_weight(const ComplexView& view, NodeId a, NodeId b, std::size_t k) {
  require_edge(view, a, b);
  const std::array<NodeId, 2> e{std::min(a, b), std::max(a, b)};
  std::uint64_t total = 0;
  for (InteractionIndex i : view.interactions_containing(e)) {
    total += sdw_contribution(view.interaction(i).order(), k);
  }
  return total;
}

EdgeWeight crw_weight(const ComplexView& view, NodeId a, NodeId b, std::size_t k) {
  require_edge(view, a, b);
  if (k < 2 || k > 4) throw std::invalid_argument("crw supports orders 2..4");
  if (a > b) std::swap(a, b);
  const std::array<NodeId, 2> e{a, b};

  // Closed cliques through (a, b) come from the interactions containing it.
  std::vector<NodeId> closed_third;
  std::vector<EdgeKey> closed_pairs;
  for (InteractionIndex i : view.interactions_containing(e)) {
    const auto& nodes = view.interaction(i).nodes;
    for (std::size_t x = 0; x < nodes.size(); ++x) {
      if (nodes[x] == a || nodes[x] == b) continue;
      if (k >= 3) closed_third.push_back(nodes[x]);
      if (k >= 4) {
        for (std::size_t y = x + 1; y < nodes.size(); ++y) {
          if (nodes[y] == a || nodes[y] == b) continue;
          closed_pairs.push_back(edge_key(nodes[x], nodes[y]));
        }
      }
    }
  }
  std::sort(closed_third.begin(), closed_third.end());
  closed_third.erase(std::unique(closed_third.begin(), closed_third.end()), closed_third.end());
  std::sort(closed_pairs.begin(), closed_pairs.end());
  closed_pairs.erase(std::unique(closed_pairs.begin(), closed_pairs.end()), closed_pairs.end());

  // All cliques through (a, b): triangles are common neighbours, 4-cliques
  // are skeleton edges among them.
  std::uint64_t all3 = 0;
  std::uint64_t all4 = 0;
  if (k >= 3) {
    const auto common = common_neighbors(view, e);
    all3 = common.size();
    if (k >= 4) {
      for (std::size_t i = 0; i < common.size(); ++i) {
        auto row = view.neighbors(common[i]);
        auto from = std::upper_bound(row.begin(), row.end(), common[i]);
        std::vector<NodeId> hits;
        detail::intersect_into(std::span<const NodeId>(from, row.end()),
                               std::span<const NodeId>(common).subspan(i + 1), hits);
        all4 += hits.size();
      }
    }
  }
  EdgeWeight w;
  w.numerator = 1 + closed_third.size() + closed_pairs.size();
  w.denominator = 1 + all3 + all4;
  return w;
}

EdgeWeight edge_weight(const ComplexView& view, WeightKind kind, NodeId a, NodeId b,
                       std::size_t k) {
  switch (kind) {
    case WeightKind::SW: return {sw_weight(view, a, b), 1};
    case WeightKind::SDW: return {sdw_weight(view, a, b, k), 1};
    case WeightKind::CRW: return crw_weight(view, a, b, k);
  }
  throw std::invalid_argument("unknown weight kind");
}

double combine(std::span<const double> weights, CombineMode mode, std::size_t k) {
  const std::size_t pairs = pair_count(k);
  if (weights.size() != pairs) {
    throw std::invalid_argument("combine expects " + std::to_string(pairs) + " weights, got " +
                                std::to_string(weights.size()));
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("edge weights must be positive");
  }
  const double e = static_cast<double>(pairs);
  switch (mode) {
    case CombineMode::Arithmetic: {
      double sum = 0.0;
      for (double w : weights) sum += w;
      return sum / e;
    }
    case CombineMode::Geometric: {
      double prod = 1.0;
      for (double w : weights) prod *= w;
      return root_of(prod, pairs) / e;
    }
    case CombineMode::Harmonic: {
      double inv = 0.0;
      for (double w : weights) inv += 1.0 / w;
      return e / inv;
    }
  }
  throw std::invalid_argument("unknown combine mode");
}

EdgeWeightCache EdgeWeightCache::build(const ComplexView& view, WeightKind kind, std::size_t k,
                                       std::vector<EdgeKey> edges, unsigned threads) {
  EdgeWeightCache cache(kind, k);
  cache.edges_ = std::move(edges);
  cache.weights_.resize(cache.edges_.size());
  detail::parallel_for(cache.edges_.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const EdgeKey e = cache.edges_[i];
      cache.weights_[i] = edge_weight(view, kind, edge_first(e), edge_second(e), k);
    }
  });
  return cache;
}

const EdgeWeight& EdgeWeightCache::at(NodeId a, NodeId b) const {
  const EdgeKey key = edge_key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw std::out_of_range("edge not in weight cache");
  return weights_[static_cast<std::size_t>(it - edges_.begin())];
}

std::vector<EdgeKey> candidate_edges(const CandidateSet& cands) {
  std::vector<EdgeKey> edges;
  edges.reserve(cands.size() * pair_count(cands.k));
  for (std::size_t c = 0; c < cands.size(); ++c) {
    auto s = cands.candidates[c];
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edges.push_back(edge_key(s[i], s[j]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Scorer::Scorer(const ComplexView& view, const CandidateSet& cands, unsigned threads)
    : view_(&view), cands_(&cands), threads_(threads) {}

const EdgeWeightCache& Scorer::cache(WeightKind kind) {
  auto& slot = caches_[static_cast<std::size_t>(kind)];
  if (!slot) {
    if (!edges_) edges_ = candidate_edges(*cands_);
    slot = EdgeWeightCache::build(*view_, kind, cands_->k, *edges_, threads_);
  }
  return *slot;
}

ScoreTable Scorer::score(Method method) {
  ScoreTable table;
  table.method = method;
  const std::size_t n = cands_->size();
  table.scores.resize(n);
  const auto& list = cands_->candidates;

  if (auto family = edge_weight_method(method)) {
    const auto& weights = cache(family->first);
    const CombineMode mode = family->second;
    const std::size_t k = cands_->k;
    detail::parallel_for(n, threads_, [&](std::size_t begin, std::size_t end) {
      std::vector<double> w;
      for (std::size_t c = begin; c < end; ++c) {
        auto s = list[c];
        w.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j) w.push_back(weights.at(s[i], s[j]).value());
        table.scores[c] = combine(w, mode, k);
      }
    });
    return table;
  }

  detail::parallel_for(n, threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      auto s = list[c];
      switch (method) {
        case Method::KCN: table.scores[c] = static_cast<double>(score_kcn(*view_, s)); break;
        case Method::KAA: table.scores[c] = score_kaa(*view_, s); break;
        case Method::KRA: table.scores[c] = score_kra(*view_, s); break;
        case Method::KPA: table.scores[c] = score_kpa(*view_, s); break;
        default: break;
      }
    }
  });
  return table;
}

ScoreTable score_candidates(const ComplexView& view, const CandidateSet& cands, Method method,
                            unsigned threads) {
  Scorer scorer(view, cands, threads);
  return scorer.score(method);
}

}  // namespace closure
