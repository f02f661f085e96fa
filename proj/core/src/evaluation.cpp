#include "closure/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.hpp"

namespace closure {

void label_candidates(const SimplicialDataset& ds, const ComplexView& view, CandidateSet& cands,
                      unsigned threads) {
  const Window test{view.window().end, static_cast<InteractionIndex>(ds.size())};
  if (test.empty()) throw EvalError("test window empty for dataset '" + ds.name + "'");
  const ComplexView future(ds, test, threads);
  cands.labels.assign(cands.size(), 0);
  detail::parallel_for(cands.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      cands.labels[c] = future.is_closed(cands.candidates[c]) ? 1 : 0;
    }
  });
}

double pr_auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("pr_auc: " + std::to_string(scores.size()) + " scores but " +
                                std::to_string(labels.size()) + " labels");
  }
  const std::size_t n = scores.size();
  const std::size_t positives =
      static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](auto l) { return l != 0; }));
  if (positives == 0 || positives == n) {
    throw EvalError("degenerate label set: " + std::to_string(positives) + " positives out of " +
                    std::to_string(n) + " candidates");
  }
  for (double s : scores) {
    if (std::isnan(s)) throw std::invalid_argument("pr_auc: NaN score");
  }

  if (n > UINT32_MAX) throw std::invalid_argument("pr_auc: too many candidates");
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return scores[a] > scores[b]; });

  // Walk tie groups (counts < 2^32, so precision cross-products fit in
  // 64 bits). Consecutive groups with identical precision are
  // merged into one term so that e.g. a perfect ranking sums to exactly 1.
  double ap = 0.0;
  std::uint64_t seen = 0;
  std::uint64_t hits = 0;
  std::uint64_t run_gain = 0;  // positives in the current equal-precision run
  std::uint64_t run_hits = 0;
  std::uint64_t run_seen = 0;
  auto flush = [&] {
    if (run_gain == 0) return;
    ap += (static_cast<double>(run_gain) / static_cast<double>(positives)) *
          (static_cast<double>(run_hits) / static_cast<double>(run_seen));
    run_gain = 0;
  };
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::uint64_t gain = 0;
    while (j < n && scores[order[j]] == scores[order[i]]) gain += labels[order[j++]] != 0;
    seen += j - i;
    hits += gain;
    i = j;
    if (gain == 0) continue;
    const bool same_precision = run_gain != 0 && hits * run_seen == run_hits * seen;
    if (!same_precision) flush();
    run_gain += gain;
    run_hits = hits;
    run_seen = seen;
  }
  flush();
  return ap;
}

EvalReport evaluate(const SimplicialDataset& ds, const EvalConfig& config) {
  if (config.k != 3 && config.k != 4) {
    throw EvalError("k must be 3 or 4, got " + std::to_string(config.k));
  }
  if (ds.empty()) throw EvalError("dataset '" + ds.name + "' is empty");

  const ComplexView view = build_view(ds, config.train_fraction, config.threads);
  CandidateSet cands = candidates(view, config.k, config.threads, config.max_candidates);
  if (cands.size() == 0) {
    throw EvalError("no candidate " + std::to_string(config.k) + "-simplices in the training window of '" +
                    ds.name + "'");
  }
  label_candidates(ds, view, cands, config.threads);
  const std::size_t positives =
      static_cast<std::size_t>(std::count(cands.labels.begin(), cands.labels.end(), 1));
  if (positives == 0 || positives == cands.size()) {
    throw EvalError("degenerate label set for '" + ds.name + "': " + std::to_string(positives) +
                    " of " + std::to_string(cands.size()) + " candidates close in the test window");
  }

  EvalReport report;
  report.dataset = ds.name;
  report.k = config.k;
  report.train_fraction = config.train_fraction;
  const double baseline = static_cast<double>(positives) / static_cast<double>(cands.size());

  Scorer scorer(view, cands, config.threads);
  for (Method m : config.methods) {
    const ScoreTable table = scorer.score(m);
    MethodResult r;
    r.method = m;
    r.pr_auc = pr_auc(table.scores, cands.labels);
    r.baseline = baseline;
    r.performance = r.pr_auc / baseline;
    r.candidates = cands.size();
    r.positives = positives;
    report.results.push_back(r);
  }
  return report;
}

std::vector<EvalReport> sweep(const SimplicialDataset& ds, const EvalConfig& config,
                              std::span<const double> fractions) {
  if (fractions.empty()) throw EvalError("sweep needs at least one training fraction");
  std::vector<EvalReport> reports;
  reports.reserve(fractions.size());
  for (double p : fractions) {
    EvalConfig c = config;
    c.train_fraction = p;
    reports.push_back(evaluate(ds, c));
  }
  return reports;
}

}  // namespace closure
