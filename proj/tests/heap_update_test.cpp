#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pheap/update.hpp"

using test_util::all_invariants;
using test_util::heap_of;
using test_util::int_heap;
using test_util::level_order;
using test_util::singleton;

TEST_CASE("bubble_up lifts a violating left child") {
  const auto r = pheap::bubble_up<std::int64_t>(2, singleton(1), int_heap{});
  CHECK(level_order(r) == std::vector<std::int64_t>{1, 2});
  CHECK(r.left().element() == 2);
}

TEST_CASE("bubble_up without violation rebuilds in place") {
  const auto r = pheap::bubble_up<std::int64_t>(0, singleton(1), singleton(3));
  CHECK(level_order(r) == std::vector<std::int64_t>{0, 1, 3});
}

TEST_CASE("bubble_up lifts a violating right child") {
  const auto right = pheap::make_heap<std::int64_t>(4, singleton(6));
  const auto r = pheap::bubble_up<std::int64_t>(5, int_heap{}, right);
  CHECK(r.element() == 4);
  CHECK(r.left().is_empty());
  CHECK(level_order(r.right()) == std::vector<std::int64_t>{5, 6});
}

TEST_CASE("bubble_up resolves a double violation left-first") {
  // unreachable from insert, but the operation stays total and deterministic
  const auto r = pheap::bubble_up<std::int64_t>(5, singleton(1), singleton(2));
  CHECK(r.element() == 1);
  CHECK(r.left().element() == 5);
  CHECK(r.right().element() == 2);
}

TEST_CASE("insert into empty heap yields a singleton") {
  const auto r = pheap::insert(int_heap{}, std::int64_t{5});
  CHECK(r == singleton(5));
}

TEST_CASE("ascending inserts never swap") {
  pheap::op_counters counters;
  pheap::counting_probe probe{&counters};
  int_heap h;
  for (std::int64_t v = 1; v <= 7; ++v) h = pheap::insert(h, v, probe);

  CHECK(h.size() == 7);
  CHECK(h.height() == 3);
  CHECK(h.is_perfect());
  CHECK(h.minimum() == 1);
  // zero swaps: the tree is exactly the level-order layout of the input
  CHECK(level_order(h) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7});
  // one comparison per walked level: sum of floor(log2 k) for k = 1..7
  CHECK(counters.comparisons == 10);
  // one allocation per walked level plus the new node each time
  CHECK(counters.branch_allocations == 17);
  CHECK(counters.max_recursion_depth == 2);

  pheap::oracle_heap<std::int64_t> oracle;
  for (std::int64_t v = 1; v <= 7; ++v) oracle.insert(v);
  for (int i = 0; i < 7; ++i) {
    CHECK(h.minimum() == oracle.delete_min());
    h = pheap::remove(h);
  }
}

TEST_CASE("every permutation of 1..7 inserts into a valid heap") {
  for (int n = 1; n <= 7; ++n) {
    test_util::for_each_permutation(n, [&](const std::vector<std::int64_t>& perm) {
      int_heap h;
      for (const std::int64_t v : perm) h = pheap::insert(h, v);
      REQUIRE(h.size() == n);
      REQUIRE(h.minimum() == 1);
      REQUIRE(pheap::check_shape(h));
      REQUIRE(pheap::check_heap_order(h));
    });
  }
}

TEST_CASE("bubble_down at the frontier") {
  const auto r = pheap::bubble_down<std::int64_t>(9, int_heap{}, int_heap{});
  CHECK(r == singleton(9));
}

TEST_CASE("bubble_down prefers the smaller child") {
  const auto left_first = pheap::bubble_down<std::int64_t>(4, singleton(2), singleton(3));
  CHECK(level_order(left_first) == std::vector<std::int64_t>{2, 4, 3});

  const auto right_first = pheap::bubble_down<std::int64_t>(4, singleton(3), singleton(2));
  CHECK(level_order(right_first) == std::vector<std::int64_t>{2, 3, 4});
}

TEST_CASE("bubble_down ties descend left") {
  const auto r = pheap::bubble_down<std::int64_t>(4, singleton(2), singleton(2));
  CHECK(r.element() == 2);
  CHECK(r.left().element() == 4);
  CHECK(r.right().element() == 2);
}

TEST_CASE("heapify of empty input") {
  CHECK(pheap::heapify(std::vector<std::int64_t>{}).is_empty());
}

TEST_CASE("heapify of two elements") {
  const auto h = heap_of({2, 1});
  CHECK(level_order(h) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("heapify of random values is a valid heap storing the input") {
  test_util::splitmix64 rng(3);
  std::vector<std::int64_t> values(1000);
  for (auto& v : values) v = rng.signed64();
  const auto h = pheap::heapify(values);
  CHECK(all_invariants(h));
  auto want = values;
  std::sort(want.begin(), want.end());
  CHECK(pheap::multiset_of(h) == want);
}

TEST_CASE("float_left fallback builds a plain branch") {
  CHECK(pheap::float_left<std::int64_t>(9, int_heap{}, int_heap{}) == singleton(9));
}

TEST_CASE("float_left parks the element below the lifted root") {
  const auto r = pheap::float_left<std::int64_t>(2, singleton(4), singleton(3));
  CHECK(level_order(r) == std::vector<std::int64_t>{4, 2, 3});
  // the order violation is intentional; remove fixes it afterwards
  CHECK_FALSE(pheap::check_heap_order(r));
  CHECK(pheap::check_shape(r));
}

TEST_CASE("float_right parks the element below the lifted root") {
  const auto right = pheap::make_heap<std::int64_t>(5, singleton(6));
  const auto r = pheap::float_right<std::int64_t>(7, singleton(1), right);
  CHECK(r.element() == 5);
  CHECK(level_order(r.left()) == std::vector<std::int64_t>{1});
  CHECK(level_order(r.right()) == std::vector<std::int64_t>{7, 6});
}

TEST_CASE("merge_children of two empties is empty") {
  CHECK(pheap::merge_children(int_heap{}, int_heap{}).is_empty());
}

TEST_CASE("merge_children floats the last node of equal perfect children from the right") {
  const auto r = pheap::merge_children(singleton(2), singleton(3));
  CHECK(level_order(r) == std::vector<std::int64_t>{3, 2});
}

TEST_CASE("merge_children descends into an imperfect left child") {
  const auto left = pheap::make_heap<std::int64_t>(2, singleton(4));
  const auto r = pheap::merge_children(left, singleton(3));
  CHECK(level_order(r) == std::vector<std::int64_t>{4, 2, 3});
}

TEST_CASE("remove of a singleton is empty") {
  CHECK(pheap::remove(singleton(5)).is_empty());
}

TEST_CASE("remove floats the last node up and sifts it down") {
  const auto h = pheap::make_heap<std::int64_t>(
      1, pheap::make_heap<std::int64_t>(2, singleton(4)), singleton(3));
  REQUIRE(all_invariants(h));
  const auto r = pheap::remove(h);
  CHECK(level_order(r) == std::vector<std::int64_t>{2, 4, 3});
  CHECK(all_invariants(r));
}

TEST_CASE("remove on empty heap throws") {
  CHECK_THROWS_AS(pheap::remove(int_heap{}), pheap::empty_heap_error);
}

TEST_CASE("repeated removes drain in ascending order") {
  auto h = heap_of({5, 3, 4, 1, 2});
  std::vector<std::int64_t> drained;
  while (!h.is_empty()) {
    drained.push_back(h.minimum());
    h = pheap::remove(h);
  }
  CHECK(drained == std::vector<std::int64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("bubble_root_down of an empty heap is empty") {
  CHECK(pheap::bubble_root_down(int_heap{}).is_empty());
}
