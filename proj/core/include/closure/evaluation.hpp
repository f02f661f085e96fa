#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "closure/cliques.hpp"
#include "closure/complex_view.hpp"
#include "closure/dataset.hpp"
#include "closure/scoring.hpp"

namespace closure {

struct EvalConfig {
  std::size_t k = 3;
  double train_fraction = 0.8;
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  std::size_t max_candidates = kDefaultMaxCandidates;
  unsigned threads = 1;
};

struct MethodResult {
  Method method{};
  double pr_auc = 0.0;
  double baseline = 0.0;
  double performance = 0.0;
  std::size_t candidates = 0;
  std::size_t positives = 0;
};

struct EvalReport {
  std::string dataset;
  std::size_t k = 0;
  double train_fraction = 0.0;
  std::vector<MethodResult> results;
};

/// Marks each candidate positive iff some interaction after the view's
/// window contains all of its nodes. Throws EvalError if that test window
/// is empty.
void label_candidates(const SimplicialDataset& ds, const ComplexView& view, CandidateSet& cands,
                      unsigned threads = 1);

/// Average precision with tied scores treated as one threshold:
/// sum over score groups (descending) of recall gain x precision at the
/// group's end. Throws EvalError without at least one positive and one
/// negative label.
double pr_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

EvalReport evaluate(const SimplicialDataset& ds, const EvalConfig& config);

/// One report per training fraction; config.train_fraction is ignored.
std::vector<EvalReport> sweep(const SimplicialDataset& ds, const EvalConfig& config,
                              std::span<const double> fractions);

}  // namespace closure
