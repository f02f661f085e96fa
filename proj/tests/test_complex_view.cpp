#include <algorithm>
#include <random>

#include "closure/complex_view.hpp"
#include "closure/synthetic.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace closure;
using closure::testing::node;
using closure::testing::running_example;

namespace {

std::vector<NodeId> nodes(std::initializer_list<RawNodeId> labels) {
  std::vector<NodeId> out;
  for (RawNodeId l : labels) out.push_back(node(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("training window is the floored prefix") {
  std::vector<RawInteraction> raw;
  for (int i = 0; i < 10; ++i) raw.push_back({{RawNodeId(i), RawNodeId(i + 1)}, i});
  const auto ds = normalize_dataset("ten", raw);
  CHECK(build_view(ds, 0.8).window().end == 8);
  CHECK(build_view(ds, 0.5).window().end == 5);
  CHECK(build_view(ds, 0.79).window().end == 7);
  CHECK(training_window_end(100, 0.57) == 57);
  CHECK_THROWS_AS(build_view(ds, 0.05), EvalError);
  CHECK_THROWS_AS(build_view(ds, 1.0), EvalError);
  CHECK_THROWS_AS(build_view(ds, 0.0), EvalError);
}

TEST_CASE("skeleton of the running example") {
  const auto ds = running_example();
  const ComplexView view(ds, Window{0, static_cast<InteractionIndex>(ds.size())});
  const auto g3 = view.neighbors(node(3));
  for (NodeId v : nodes({1, 2, 4, 5, 6})) {
    CHECK(std::find(g3.begin(), g3.end(), v) != g3.end());
  }
  CHECK(view.degree(node(3)) == 6);  // 1, 2, 4, 5, 6, 7
  CHECK(view.adjacent(node(2), node(7)));
  CHECK_FALSE(view.adjacent(node(2), node(5)));
}

TEST_CASE("single pairwise interaction") {
  const auto ds = closure::testing::make_dataset({{{1, 2}, 0}, {{1, 2}, 1}});
  const ComplexView view = build_view(ds, 0.5);
  CHECK(view.degrees() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("closedness on the running example") {
  const auto ds = running_example();
  const ComplexView view(ds, Window{0, static_cast<InteractionIndex>(ds.size())});
  CHECK_FALSE(view.is_closed(nodes({2, 3, 7})));
  CHECK(view.is_closed(nodes({3, 5, 6})));
  CHECK(view.is_closed(nodes({1, 2, 3, 4})));
  CHECK_FALSE(view.is_closed(nodes({1, 2, 3, 4, 5})));
  for (const auto& it : ds.interactions) {
    for (std::size_t i = 0; i < it.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < it.nodes.size(); ++j)
        CHECK(view.is_closed(std::vector<NodeId>{it.nodes[i], it.nodes[j]}));
  }
}

TEST_CASE("interactions_containing on the running example") {
  const auto ds = running_example();
  const ComplexView view(ds, Window{0, static_cast<InteractionIndex>(ds.size())});
  const auto hits = view.interactions_containing(nodes({3, 4}));
  REQUIRE(hits.size() == 2);
  CHECK(view.interaction(hits[0]).nodes == nodes({1, 2, 3, 4}));
  CHECK(view.interaction(hits[1]).nodes == nodes({3, 4, 5}));
  CHECK(view.interactions_containing(nodes({1, 6})).empty());
  const auto of3 = view.interactions_containing(nodes({3}));
  CHECK(std::vector<InteractionIndex>(view.interactions_of(node(3)).begin(),
                                      view.interactions_of(node(3)).end()) == of3);
  CHECK(of3.size() == 4);
}

TEST_CASE("window restricts the structure") {
  const auto ds = running_example();
  const ComplexView view(ds, Window{0, 5});  // before (3,4,5) closes
  CHECK_FALSE(view.is_closed(nodes({3, 4, 5})));
  CHECK(view.interactions_containing(nodes({3, 4})).size() == 1);
}

TEST_CASE("view invariants match brute force on random data") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto ds = generate_synthetic({seed, 6 + seed % 24, 30 + (seed * 13) % 260, 2 + seed % 5});
    const auto end = static_cast<InteractionIndex>(ds.size() * 3 / 4);
    const ComplexView view(ds, Window{0, end}, 1 + seed % 3);
    oracle::BruteComplex brute(ds, Window{0, end});
    const NodeId n = static_cast<NodeId>(ds.node_count);
    for (NodeId a = 0; a < n; ++a) {
      CHECK(view.degree(a) == brute.degree(a));
      CHECK(view.degree(a) == view.neighbors(a).size());
      for (NodeId b = 0; b < n; ++b) {
        if (a == b) continue;
        CHECK(view.adjacent(a, b) == brute.adjacent(a, b));
        CHECK(view.adjacent(a, b) == view.adjacent(b, a));
        const std::vector<NodeId> pair{std::min(a, b), std::max(a, b)};
        CHECK(view.is_closed(pair) == view.adjacent(a, b));
      }
    }
    // Every face of every window interaction is closed.
    for (InteractionIndex i = 0; i < end; ++i) {
      const auto& members = ds.interactions[i].nodes;
      for (std::size_t q = 2; q <= std::min<std::size_t>(members.size(), 4); ++q) {
        for (const auto& face : oracle::subsets(members, q)) CHECK(view.is_closed(face));
      }
    }
    // Index intersection equals a scan for random small sets.
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<NodeId> set;
      const std::size_t size = 1 + trial % 4;
      while (set.size() < size) {
        NodeId v = pick(rng);
        if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
      }
      std::sort(set.begin(), set.end());
      CHECK(view.interactions_containing(set) == brute.containing(set));
      CHECK(view.is_closed(set) == brute.contained(set));
    }
  }
}
