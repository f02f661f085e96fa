#include <algorithm>
#include <cmath>
#include <random>

#include "closure/evaluation.hpp"
#include "closure/synthetic.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace closure;
using closure::testing::make_dataset;
using closure::testing::node;
using closure::testing::running_example;

namespace {

std::size_t index_of(const CandidateSet& c, std::vector<NodeId> set) {
  std::sort(set.begin(), set.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::equal(set.begin(), set.end(), c.candidates[i].begin())) return i;
  }
  return SIZE_MAX;
}

}  // namespace

TEST_CASE("labels on the running example") {
  const auto ds = running_example();
  const ComplexView train(ds, Window{0, 5});
  auto cands = candidates(train, 3);
  label_candidates(ds, train, cands);
  REQUIRE(cands.labels.size() == cands.size());
  const auto closing = index_of(cands, {node(3), node(4), node(5)});
  const auto staying_open = index_of(cands, {node(2), node(3), node(7)});
  REQUIRE(closing != SIZE_MAX);
  REQUIRE(staying_open != SIZE_MAX);
  CHECK(cands.labels[closing] == 1);
  CHECK(cands.labels[staying_open] == 0);
}

TEST_CASE("closure inside a larger test interaction is positive") {
  const auto ds = make_dataset({{{1, 2}, 0}, {{2, 3}, 1}, {{1, 3}, 2}, {{1, 2, 3, 9}, 3}});
  const ComplexView train(ds, Window{0, 3});
  auto cands = candidates(train, 3);
  REQUIRE(cands.size() == 1);
  label_candidates(ds, train, cands);
  CHECK(cands.labels[0] == 1);
}

TEST_CASE("labelling needs a test window") {
  const auto ds = running_example();
  const ComplexView all(ds, Window{0, static_cast<InteractionIndex>(ds.size())});
  auto cands = candidates(all, 3);
  CHECK_THROWS_AS(label_candidates(ds, all, cands), EvalError);
}

TEST_CASE("labels match a brute-force scan") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto ds = generate_synthetic({seed, 8 + seed % 22, 60 + seed * 5, 2 + seed % 5});
    const ComplexView view = build_view(ds, 0.7, 1 + seed % 4);
    auto cands = candidates(view, 3 + seed % 2);
    label_candidates(ds, view, cands, 1 + seed % 3);
    for (std::size_t c = 0; c < cands.size(); ++c) {
      const oracle::Set s(cands.candidates[c].begin(), cands.candidates[c].end());
      CHECK(cands.labels[c] == oracle::closes_after(ds, view.window().end, s));
    }
  }
}

TEST_CASE("average precision examples") {
  const std::vector<double> scores{0.9, 0.8, 0.7};
  const std::vector<std::uint8_t> labels{1, 0, 1};
  CHECK(pr_auc(scores, labels) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(pr_auc(scores, labels) == doctest::Approx(0.8333).epsilon(1e-4));

  CHECK(pr_auc(std::vector<double>{3, 2, 1, 0}, std::vector<std::uint8_t>{1, 1, 0, 0}) == 1.0);
  CHECK(pr_auc(std::vector<double>{5, 5, 5, 5, 5}, std::vector<std::uint8_t>{0, 1, 0, 0, 1}) ==
        2.0 / 5.0);
  // A tie between a positive and a negative: one threshold at precision 1/2.
  CHECK(pr_auc(std::vector<double>{1, 1}, std::vector<std::uint8_t>{1, 0}) == 0.5);

  CHECK_THROWS_AS(pr_auc(std::vector<double>{1, 2}, std::vector<std::uint8_t>{1, 1}), EvalError);
  CHECK_THROWS_AS(pr_auc(std::vector<double>{1, 2}, std::vector<std::uint8_t>{0, 0}), EvalError);
  CHECK_THROWS_AS(pr_auc(std::vector<double>{1}, std::vector<std::uint8_t>{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("average precision properties on random rankings") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 400;
    std::vector<std::uint8_t> labels(n);
    for (auto& l : labels) l = rng() % 4 == 0 ? 1 : 0;
    labels[0] = 1;
    labels[1] = 0;
    const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
    const double baseline = static_cast<double>(positives) / static_cast<double>(n);

    // Integer-valued scores produce heavy ties, like KCN or SW.
    std::vector<double> scores(n);
    for (auto& s : scores) s = static_cast<double>(1 + rng() % 12);

    const double ap = pr_auc(scores, labels);
    CHECK(ap >= 0.0);
    CHECK(ap <= 1.0);
    CHECK(ap == doctest::Approx(oracle::average_precision_exact(scores, labels)).epsilon(1e-12));

    std::vector<double> squared(scores), shifted(scores), logged(scores);
    for (auto& s : squared) s = s * s;
    for (auto& s : shifted) s = 3.0 * s + 100.0;
    for (auto& s : logged) s = std::log(s);
    CHECK(pr_auc(squared, labels) == ap);
    CHECK(pr_auc(shifted, labels) == ap);
    CHECK(pr_auc(logged, labels) == ap);

    std::vector<double> perfect(n);
    for (std::size_t i = 0; i < n; ++i) perfect[i] = labels[i] ? 2.0 + static_cast<double>(rng() % 5) : 1.0;
    CHECK(pr_auc(perfect, labels) == 1.0);

    const std::vector<double> constant(n, 0.25);
    CHECK(pr_auc(constant, labels) == baseline);
  }
}

TEST_CASE("evaluate reports the ratio of AP to the baseline") {
  const auto ds = generate_synthetic({17, 30, 1000, 5});
  EvalConfig config;
  config.k = 3;
  config.train_fraction = 0.8;
  const auto report = evaluate(ds, config);
  CHECK(report.results.size() == kAllMethods.size());
  for (const auto& r : report.results) {
    CHECK(r.performance == r.pr_auc / r.baseline);
    CHECK(r.baseline == static_cast<double>(r.positives) / static_cast<double>(r.candidates));
    CHECK(r.baseline > 0.0);
    CHECK(r.baseline < 1.0);
    CHECK(r.pr_auc >= 0.0);
    CHECK(r.pr_auc <= 1.0);
  }
  MethodResult manual{Method::SWA, 0.5, 0.25, 0.5 / 0.25, 4, 1};
  CHECK(manual.performance == 2.0);
}

TEST_CASE("evaluate rejects degenerate inputs") {
  const auto ds = running_example();
  EvalConfig config;
  config.train_fraction = 0.8;  // one candidate (3,4,5), which closes
  CHECK_THROWS_WITH_AS(evaluate(ds, config), doctest::Contains("degenerate"), EvalError);
  config.k = 5;
  CHECK_THROWS_AS(evaluate(ds, config), EvalError);
  const auto closed = make_dataset({{{1, 2, 3}, 0}, {{1, 2, 3}, 1}});
  config.k = 3;
  config.train_fraction = 0.5;
  CHECK_THROWS_WITH_AS(evaluate(closed, config), doctest::Contains("no candidate"), EvalError);
}

TEST_CASE("evaluate is independent of the thread count") {
  const auto ds = generate_synthetic({23, 28, 900, 5});
  for (std::size_t k : {3u, 4u}) {
    EvalConfig config;
    config.k = k;
    config.threads = 1;
    const auto ref = evaluate(ds, config);
    for (unsigned t : {2u, 5u}) {
      config.threads = t;
      const auto other = evaluate(ds, config);
      REQUIRE(other.results.size() == ref.results.size());
      for (std::size_t i = 0; i < ref.results.size(); ++i) {
        CHECK(other.results[i].pr_auc == ref.results[i].pr_auc);
        CHECK(other.results[i].performance == ref.results[i].performance);
        CHECK(other.results[i].candidates == ref.results[i].candidates);
      }
    }
  }
}

TEST_CASE("sweep produces one report per fraction with recounted baselines") {
  const auto ds = generate_synthetic({31, 30, 1000, 4});
  EvalConfig config;
  config.methods = {Method::SWG, Method::KCN};
  const std::vector<double> fractions{0.5, 0.6, 0.7, 0.8};
  const auto reports = sweep(ds, config, fractions);
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].train_fraction == fractions[i]);
    CHECK(reports[i].results.size() == 2);
    const auto end = training_window_end(ds.size(), fractions[i]);
    oracle::BruteComplex brute(ds, Window{0, end});
    const auto open = brute.open_cliques(3);
    std::size_t positives = 0;
    for (const auto& s : open) positives += oracle::closes_after(ds, end, s);
    CHECK(reports[i].results[0].candidates == open.size());
    CHECK(reports[i].results[0].positives == positives);
    CHECK(reports[i].results[0].baseline ==
          static_cast<double>(positives) / static_cast<double>(open.size()));
  }

  const std::vector<double> single{0.8};
  const auto one = sweep(ds, config, single);
  config.train_fraction = 0.8;
  const auto direct = evaluate(ds, config);
  REQUIRE(one.size() == 1);
  for (std::size_t m = 0; m < direct.results.size(); ++m) {
    CHECK(one[0].results[m].pr_auc == direct.results[m].pr_auc);
  }
  CHECK_THROWS_AS(sweep(ds, config, std::span<const double>{}), EvalError);
}

TEST_CASE("synthetic generator") {
  const SyntheticParams p{1, 10, 50, 4};
  const auto a = generate_synthetic(p);
  const auto b = generate_synthetic(p);
  CHECK(a == b);
  CHECK(a.size() == 50);
  CHECK(a.dropped_degenerate == 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.interactions[i].order() >= 2);
    CHECK(a.interactions[i].order() <= 4);
    if (i > 0) CHECK(a.interactions[i].time > a.interactions[i - 1].time);
  }
  CHECK(generate_synthetic({2, 10, 50, 4}) != a);

  const auto pairwise = generate_synthetic({5, 12, 200, 2});
  const ComplexView view(pairwise, Window{0, static_cast<InteractionIndex>(pairwise.size())});
  CHECK(partition_cliques(view, 3).closed.empty());
  CHECK(partition_cliques(view, 4).closed.empty());
  CHECK_THROWS_AS(generate_synthetic({1, 3, 10, 4}), std::invalid_argument);
}
