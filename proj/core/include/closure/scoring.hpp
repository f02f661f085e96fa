#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "closure/cliques.hpp"
#include "closure/complex_view.hpp"

namespace closure {

enum class Method : std::uint8_t {
  KCN, KAA, KRA, KPA,
  SWA, SWG, SWH,
  SDWA, SDWG, SDWH,
  CRWA, CRWG, CRWH,
};

inline constexpr std::array<Method, 13> kAllMethods = {
    Method::KCN,  Method::KAA,  Method::KRA,  Method::KPA,  Method::SWA,
    Method::SWG,  Method::SWH,  Method::SDWA, Method::SDWG, Method::SDWH,
    Method::CRWA, Method::CRWG, Method::CRWH,
};

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

enum class WeightKind : std::uint8_t { SW, SDW, CRW };
enum class CombineMode : std::uint8_t { Arithmetic, Geometric, Harmonic };

std::string_view weight_kind_name(WeightKind kind) noexcept;

/// Edge-weight family and averaging mode, or nullopt for node-based methods.
std::optional<std::pair<WeightKind, CombineMode>> edge_weight_method(Method m) noexcept;

/// Exact positive rational edge weight. SW and SDW weights are integers.
struct EdgeWeight {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const EdgeWeight&, const EdgeWeight&) = default;
};

// Node-based indices over the skeleton. `nodes` is an ascending clique.

/// Number of common skeleton neighbours.
std::size_t score_kcn(const ComplexView& view, std::span<const NodeId> nodes);
/// Sum of 1/ln(degree) over common neighbours.
double score_kaa(const ComplexView& view, std::span<const NodeId> nodes);
/// Sum of 1/degree over common neighbours.
double score_kra(const ComplexView& view, std::span<const NodeId> nodes);
/// Product of the nodes' degrees.
double score_kpa(const ComplexView& view, std::span<const NodeId> nodes);

/// Common skeleton neighbours of all `nodes`, ascending.
std::vector<NodeId> common_neighbors(const ComplexView& view, std::span<const NodeId> nodes);

// Edge weights. (a, b) must be a skeleton edge of the view.

/// Number of window interactions containing both endpoints.
std::uint64_t sw_weight(const ComplexView& view, NodeId a, NodeId b);

/// Size of the face sequence obtained by decomposing every window
/// interaction S that contains (a, b): its k-faces through (a, b), plus
/// the q-faces (q = k-1..2) through (a, b) of each of those k-faces.
/// An interaction of order g >= k contributes C(g-2, k-2) * 2^(k-2);
/// one of order 2 <= g < k contributes 2^(g-2).
std::uint64_t sdw_weight(const ComplexView& view, NodeId a, NodeId b, std::size_t k);

/// Contribution of a single order-g interaction to sdw.
std::uint64_t sdw_contribution(std::size_t g, std::size_t k) noexcept;

/// Closed cliques through (a, b) of order 2..k over all cliques through
/// (a, b) of order 2..k. Cliques are distinct node sets.
EdgeWeight crw_weight(const ComplexView& view, NodeId a, NodeId b, std::size_t k);

EdgeWeight edge_weight(const ComplexView& view, WeightKind kind, NodeId a, NodeId b,
                       std::size_t k);

/// Averages the C(k,2) edge weights of a candidate.
///   arithmetic: sum / E
///   geometric:  prod^(1/E) / E
///   harmonic:   E / sum(1/w)
/// with E = k(k-1)/2. Weights must be positive.
double combine(std::span<const double> weights, CombineMode mode, std::size_t k);

/// Weights for a fixed set of skeleton edges, looked up by binary search.
class EdgeWeightCache {
 public:
  EdgeWeightCache(WeightKind kind, std::size_t k) : kind_(kind), k_(k) {}

  /// Computes weights for `edges` (ascending, unique) in parallel.
  static EdgeWeightCache build(const ComplexView& view, WeightKind kind, std::size_t k,
                               std::vector<EdgeKey> edges, unsigned threads = 1);

  WeightKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return k_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const EdgeKey> edges() const noexcept { return edges_; }
  std::span<const EdgeWeight> weights() const noexcept { return weights_; }

  /// Throws std::out_of_range for an edge that is not cached.
  const EdgeWeight& at(NodeId a, NodeId b) const;

 private:
  WeightKind kind_;
  std::size_t k_;
  std::vector<EdgeKey> edges_;
  std::vector<EdgeWeight> weights_;
};

/// Distinct skeleton edges spanned by the candidates, ascending.
std::vector<EdgeKey> candidate_edges(const CandidateSet& cands);

struct ScoreTable {
  Method method{};
  std::vector<double> scores;
};

/// Scores candidates for any subset of methods. Edge-weight caches are
/// built on first use and shared between the modes of a family.
class Scorer {
 public:
  Scorer(const ComplexView& view, const CandidateSet& cands, unsigned threads = 1);

  ScoreTable score(Method method);
  const EdgeWeightCache& cache(WeightKind kind);
  bool has_cache(WeightKind kind) const noexcept {
    return caches_[static_cast<std::size_t>(kind)].has_value();
  }

 private:
  const ComplexView* view_;
  const CandidateSet* cands_;
  unsigned threads_;
  std::optional<std::vector<EdgeKey>> edges_;
  std::array<std::optional<EdgeWeightCache>, 3> caches_;
};

ScoreTable score_candidates(const ComplexView& view, const CandidateSet& cands, Method method,
                            unsigned threads = 1);

}  // namespace closure
