#include "equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "closure/evaluation.hpp"
#include "oracle.hpp"

namespace closure::oracle {

namespace {

std::string describe(const SimplicialDataset& ds, std::size_t k, const std::string& what) {
  return ds.name + " k=" + std::to_string(k) + ": " + what;
}

}  // namespace

EquivalenceStats compare_pipeline(const SimplicialDataset& ds, double fraction, std::size_t k,
                                  unsigned threads, std::vector<std::string>& mismatches) {
  EquivalenceStats stats;
  const ComplexView view = build_view(ds, fraction, threads);
  const auto end = view.window().end;
  BruteComplex brute(ds, Window{0, end});

  auto cands = candidates(view, k, threads);
  const auto expected = brute.open_cliques(k);
  stats.candidates = expected.size();
  bool same = cands.size() == expected.size();
  for (std::size_t c = 0; same && c < cands.size(); ++c) {
    same = std::equal(expected[c].begin(), expected[c].end(), cands.candidates[c].begin());
  }
  if (!same) {
    mismatches.push_back(describe(ds, k, "candidate sets differ"));
    return stats;
  }
  if (cands.size() == 0 || end == ds.size()) return stats;

  label_candidates(ds, view, cands, threads);
  std::vector<std::uint8_t> labels;
  for (const auto& s : expected) labels.push_back(closes_after(ds, end, s) ? 1 : 0);
  if (cands.labels != labels) mismatches.push_back(describe(ds, k, "labels differ"));

  const auto edges = candidate_edges(cands);
  stats.edges = edges.size();
  for (WeightKind kind : {WeightKind::SW, WeightKind::SDW, WeightKind::CRW}) {
    const auto cache = EdgeWeightCache::build(view, kind, k, edges, threads);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const NodeId a = edge_first(edges[i]);
      const NodeId b = edge_second(edges[i]);
      const auto& w = cache.weights()[i];
      bool ok = true;
      switch (kind) {
        case WeightKind::SW: ok = w == EdgeWeight{brute.sw(a, b), 1}; break;
        case WeightKind::SDW: ok = w == EdgeWeight{brute.sdw(a, b, k), 1}; break;
        case WeightKind::CRW: ok = w == brute.crw(a, b, k); break;
      }
      if (!ok) {
        mismatches.push_back(describe(ds, k, std::string(weight_kind_name(kind)) + " weight of (" +
                                                 std::to_string(a) + "," + std::to_string(b) + ")"));
      }
    }
  }

  const bool mixed = std::count(labels.begin(), labels.end(), 1) > 0 &&
                     std::count(labels.begin(), labels.end(), 0) > 0;
  Scorer scorer(view, cands, threads);
  for (Method m : kAllMethods) {
    const auto table = scorer.score(m);
    std::vector<double> ref(cands.size());
    for (std::size_t c = 0; c < cands.size(); ++c) ref[c] = brute.score(m, expected[c], k);
    ++stats.score_checks;
    if (table.scores != ref) {
      mismatches.push_back(describe(ds, k, std::string(method_name(m)) + " scores differ"));
    }
    if (mixed) {
      ++stats.ap_checks;
      const double exact = average_precision_exact(ref, labels);
      const double got = pr_auc(table.scores, cands.labels);
      if (std::abs(got - exact) > 1e-12) {
        mismatches.push_back(describe(ds, k, std::string(method_name(m)) + " AP " +
                                                 std::to_string(got) + " vs " + std::to_string(exact)));
      }
    }
  }
  return stats;
}

}  // namespace closure::oracle
