#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pheap/oracle.hpp"

using test_util::splitmix64;

TEST_CASE("oracle drains inserted values in sorted order") {
  pheap::oracle_heap<std::int64_t> o;
  o.insert(3);
  o.insert(1);
  o.insert(2);
  CHECK(o.size() == 3);
  CHECK(o.delete_min() == 1);
  CHECK(o.delete_min() == 2);
  CHECK(o.delete_min() == 3);
  CHECK(o.empty());
}

TEST_CASE("oracle min after single insert") {
  pheap::oracle_heap<std::int64_t> o;
  o.insert(5);
  CHECK(o.min() == 5);
  CHECK(o.size() == 1);
}

TEST_CASE("oracle empty access throws") {
  pheap::oracle_heap<std::int64_t> o;
  CHECK_THROWS_AS(o.min(), std::logic_error);
  CHECK_THROWS_AS(o.delete_min(), std::logic_error);
}

TEST_CASE("oracle self-check: random drain is nondecreasing and complete") {
  splitmix64 rng(7);
  pheap::oracle_heap<std::int64_t> o;
  std::vector<std::int64_t> input;
  for (int i = 0; i < 2000; ++i) {
    // quarter of the values drawn from a narrow range to force duplicates
    const std::int64_t v = rng.below(4) == 0
                               ? static_cast<std::int64_t>(rng.below(10))
                               : rng.signed64();
    input.push_back(v);
    o.insert(v);
  }
  std::vector<std::int64_t> drained;
  while (!o.empty()) drained.push_back(o.delete_min());
  std::sort(input.begin(), input.end());
  CHECK(drained == input);
}

TEST_CASE("level_order_split on known sizes") {
  CHECK(pheap::level_order_split(0) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK(pheap::level_order_split(1) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK(pheap::level_order_split(4) == std::pair<std::int64_t, std::int64_t>{2, 1});
  CHECK(pheap::level_order_split(7) == std::pair<std::int64_t, std::int64_t>{3, 3});
}

TEST_CASE("level_order_split partitions every size") {
  for (std::int64_t n = 1; n <= 300; ++n) {
    const auto [l, r] = pheap::level_order_split(n);
    CHECK(l + r + 1 == n);
    CHECK(l >= r);        // left side fills first
    CHECK(l <= 2 * r + 1);  // and by at most one full bottom level
  }
}

TEST_CASE("shape_matches_level_order agrees with heapify shapes") {
  splitmix64 rng(11);
  for (std::int64_t n = 0; n <= 64; ++n) {
    std::vector<std::int64_t> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = rng.signed64();
    const auto h = pheap::heapify(values);
    CHECK(pheap::shape_matches_level_order(h, n));
    CHECK_FALSE(pheap::shape_matches_level_order(h, n + 1));
  }
}

TEST_CASE("multiset_of collects all elements") {
  CHECK(pheap::multiset_of(test_util::int_heap{}).empty());
  CHECK(pheap::multiset_of(test_util::singleton(7)) == std::vector<std::int64_t>{7});
  const auto h = test_util::heap_of({5, 3, 3, 9});
  CHECK(pheap::multiset_of(h) == std::vector<std::int64_t>{3, 3, 5, 9});
}
