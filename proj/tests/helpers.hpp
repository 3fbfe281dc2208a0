#pragma once

#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "pheap/heap.hpp"
#include "pheap/invariants.hpp"
#include "pheap/oracle.hpp"
#include "pheap/update.hpp"
#include "rng.hpp"

namespace test_util {

using int_heap = pheap::heap<std::int64_t>;
using pheap::cli::splitmix64;

inline int_heap singleton(std::int64_t v) { return pheap::make_heap(v); }

inline int_heap heap_of(std::initializer_list<std::int64_t> values) {
  return pheap::heapify(std::vector<std::int64_t>(values));
}

inline bool all_invariants(const int_heap& h) {
  return pheap::check_shape(h) && pheap::check_heap_order(h) &&
         pheap::check_caches(h);
}

// Elements in breadth-first order; the zero-swap witness tests compare
// this against the exact expected layout.
inline std::vector<std::int64_t> level_order(const int_heap& h) {
  std::vector<std::int64_t> out;
  std::deque<int_heap> queue;
  if (!h.is_empty()) queue.push_back(h);
  while (!queue.empty()) {
    const int_heap cur = queue.front();
    queue.pop_front();
    out.push_back(cur.element());
    if (!cur.left().is_empty()) queue.push_back(cur.left());
    if (!cur.right().is_empty()) queue.push_back(cur.right());
  }
  return out;
}

// Full preorder image of a heap, empty slots included, for persistence
// checks: two heaps with equal snapshots are structurally identical.
inline void snapshot_into(const int_heap& h,
                          std::vector<std::optional<std::int64_t>>& out) {
  if (h.is_empty()) {
    out.push_back(std::nullopt);
    return;
  }
  out.push_back(h.element());
  snapshot_into(h.left(), out);
  snapshot_into(h.right(), out);
}

inline std::vector<std::optional<std::int64_t>> snapshot(const int_heap& h) {
  std::vector<std::optional<std::int64_t>> out;
  snapshot_into(h, out);
  return out;
}

// Literal single-step compositions of the public operations. These are the
// independent route the production insert/remove walks are checked
// against: same recursion criteria, each level spelled out with bubble_up
// or merge_children exactly as the production code is documented to
// behave.
inline int_heap reference_insert(const int_heap& h, std::int64_t x) {
  if (h.is_empty()) return pheap::make_heap(x);
  if (!h.left().is_perfect())
    return pheap::bubble_up(h.element(), reference_insert(h.left(), x), h.right());
  if (!h.right().is_perfect())
    return pheap::bubble_up(h.element(), h.left(), reference_insert(h.right(), x));
  if (h.right().height() < h.left().height())
    return pheap::bubble_up(h.element(), h.left(), reference_insert(h.right(), x));
  return pheap::bubble_up(h.element(), reference_insert(h.left(), x), h.right());
}

inline int_heap reference_remove(const int_heap& h) {
  return pheap::bubble_root_down(pheap::merge_children(h.left(), h.right()));
}

// Runs fn on every permutation of {1..n}.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    fn(values);
  } while (std::next_permutation(values.begin(), values.end()));
}

// Pointers of every branch node, for structural-sharing assertions.
inline void collect_nodes(const pheap::detail::node_ptr<std::int64_t>& n,
                          std::vector<const void*>& out) {
  if (!n) return;
  out.push_back(n.get());
  collect_nodes(n->left, out);
  collect_nodes(n->right, out);
}

inline std::vector<const void*> node_pointers(const int_heap& h) {
  std::vector<const void*> out;
  collect_nodes(pheap::detail::access::root(h), out);
  std::sort(out.begin(), out.end());
  return out;
}

// Number of nodes in `derived` that are not shared with `base`.
inline std::int64_t fresh_node_count(const int_heap& base, const int_heap& derived) {
  const auto base_nodes = node_pointers(base);
  std::int64_t fresh = 0;
  for (const void* p : node_pointers(derived))
    if (!std::binary_search(base_nodes.begin(), base_nodes.end(), p)) ++fresh;
  return fresh;
}

}  // namespace test_util
