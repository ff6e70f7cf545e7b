#include "rcsp/generators.hpp"
#include "rcsp/label_store.hpp"

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <thread>

using namespace rcsp;

namespace {

FrontierEntry entry(LabelHandle h, CostVector g) { return FrontierEntry{h, std::move(g)}; }

std::vector<CostVector> gs(std::span<const FrontierEntry> list) {
  std::vector<CostVector> out;
  for (const auto& e : list) out.push_back(e.g);
  return out;
}

}  // namespace

TEST_CASE("is_dominated examples") {
  const std::vector<FrontierEntry> x5 = {entry(5, {2, 2, 2})};
  CHECK_FALSE(is_dominated({3, 1, 1}, x5));
  CHECK_FALSE(is_dominated({3, 1, 1}, {}));
  CHECK(is_dominated({2, 2, 2}, x5));
  std::uint64_t comparisons = 0;
  is_dominated({9, 9, 9}, x5, &comparisons);
  CHECK(comparisons == 1);
}

TEST_CASE("quick_check examples") {
  FrontierStore store(4);
  CHECK_FALSE(store.quick_check(0, {2, 1, 1}));
  store.insert_nondominated(0, entry(0, {1, 1, 1}));
  CHECK(store.quick_check(0, {2, 1, 1}));

  FrontierStore u3(4);
  u3.insert_nondominated(3, entry(5, {2, 2, 2}));
  CHECK_FALSE(u3.quick_check(3, {3, 1, 1}));
}

TEST_CASE("insert demotes truncated-dominated members") {
  FrontierStore store(4);
  store.insert_nondominated(3, entry(5, {2, 2, 2}));
  store.insert_nondominated(3, entry(4, {3, 1, 1}));
  REQUIRE(store.main(3).size() == 1);
  CHECK(store.main(3)[0].label == 4);
  REQUIRE(store.demoted(3).size() == 1);
  CHECK(store.demoted(3)[0].label == 5);
  CHECK(store.validate().empty());
}

TEST_CASE("insert into an empty list") {
  FrontierStore store(2);
  store.insert_nondominated(1, entry(0, {1, 2, 3}));
  CHECK(store.main(1).size() == 1);
  CHECK(store.demoted(1).empty());
  CHECK(store.last(1)->label == 0);
  CHECK(store.last(0) == nullptr);
}

TEST_CASE("incomparable members all stay in X") {
  FrontierStore store(1);
  store.insert_nondominated(0, entry(0, {5, 1, 9}));
  store.insert_nondominated(0, entry(1, {5, 9, 1}));
  store.insert_nondominated(0, entry(2, {6, 2, 2}));
  CHECK(gs(store.main(0)) == std::vector<CostVector>{{5, 1, 9}, {5, 9, 1}, {6, 2, 2}});
  CHECK(store.demoted(0).empty());
  CHECK(store.validate().empty());
}

TEST_CASE("an equal-cost label that weakly dominates a member replaces it") {
  FrontierStore store(1);
  store.insert_nondominated(0, entry(0, {2, 2, 1}));
  store.insert_nondominated(0, entry(1, {2, 1, 1}));
  CHECK(gs(store.main(0)) == std::vector<CostVector>{{2, 1, 1}});
  CHECK(store.demoted(0).empty());
  CHECK(store.validate().empty());
}

TEST_CASE("demoted list is kept in lexicographic order of resources") {
  FrontierStore store(1);
  store.insert_nondominated(0, entry(0, {1, 5, 3}));
  store.insert_nondominated(0, entry(1, {1, 3, 5}));
  store.insert_nondominated(0, entry(2, {2, 1, 1}));
  CHECK(gs(store.demoted(0)) == std::vector<CostVector>{{1, 3, 5}, {1, 5, 3}});
  CHECK(store.validate().empty());
}

TEST_CASE("random extraction sequences keep the invariants") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const std::size_t k = rng.uniform(2, 4);
    const std::size_t count = rng.uniform(1, 60);
    std::vector<CostVector> labels;
    for (std::size_t i = 0; i < count; ++i) {
      CostVector g;
      for (std::size_t j = 0; j < k; ++j) g.push_back(rng.uniform(0, 6));
      labels.push_back(g);
    }
    // Extraction order is non-decreasing in g1.
    std::stable_sort(labels.begin(), labels.end(),
                     [](const CostVector& a, const CostVector& b) { return a[0] < b[0]; });

    FrontierStore store(3);
    std::vector<CostVector> accepted;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const StateId u = static_cast<StateId>(rng.uniform(0, 2));
      const CostVector& g = labels[i];
      const bool quick = store.quick_check(u, g);
      const bool dominated = store.is_dominated(u, g);
      if (quick) CHECK(dominated);
      if (dominated) continue;
      store.insert_nondominated(u, entry(static_cast<LabelHandle>(i), g));
      const auto problems = store.validate();
      for (const auto& p : problems) FAIL_CHECK(p);
      // Every accepted label is still covered by some member of X.
      if (u == 0) accepted.push_back(g);
      for (const auto& a : accepted) CHECK(is_dominated(a, store.main(0)));
    }
    CHECK(store.monotonicity_violations() == 0);
  }
}

TEST_CASE("an identical vector is reported as dominated") {
  FrontierStore store(1);
  store.insert_nondominated(0, entry(0, {1, 2, 2}));
  CHECK(store.is_dominated(0, {1, 2, 2}));
  CHECK(store.validate().empty());
}

TEST_CASE("synchronized store serves concurrent readers") {
  FrontierStore store(8, /*synchronized=*/true);
  std::atomic<bool> done{false};
  std::atomic<std::uint64_t> torn{0};
  std::thread reader([&] {
    while (!done.load()) {
      for (StateId u = 0; u < 8; ++u) {
        store.with_lists(u, [&](std::span<const FrontierEntry> main,
                                std::span<const FrontierEntry> demoted) {
          for (const auto& e : main) {
            if (e.g.size() != 3) ++torn;
          }
          for (const auto& e : demoted) {
            if (e.g.size() != 3) ++torn;
          }
        });
      }
    }
  });
  Rng rng(99);
  for (Cost g1 = 0; g1 < 400; ++g1) {
    const StateId u = static_cast<StateId>(rng.uniform(0, 7));
    const CostVector g{g1, rng.uniform(0, 50), rng.uniform(0, 50)};
    if (!store.is_dominated(u, g)) store.insert_nondominated(u, entry(static_cast<LabelHandle>(g1), g));
  }
  done.store(true);
  reader.join();
  CHECK(torn.load() == 0);
  CHECK(store.validate().empty());
}

TEST_CASE("explored lists append only") {
  ExploredLists lists(2);
  lists.append(1, entry(0, {1, 1}));
  lists.append(1, entry(1, {0, 0}));
  CHECK(lists.at(1).size() == 2);
  CHECK(lists.at(0).empty());
}
