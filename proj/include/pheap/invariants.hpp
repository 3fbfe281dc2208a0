#pragma once

// Structural invariant checkers. All three recompute what they verify from
// the nodes themselves: check_shape and check_caches walk with fresh size
// and height calculations, so a corrupted cache cannot hide from the pair
// of them, and check_heap_order re-runs the comparator along every edge.

#include <cstdint>

#include "pheap/heap.hpp"

namespace pheap {

namespace detail {

template <typename E>
struct shape_info {
  bool complete;
  bool perfect;
  std::int64_t height;
};

template <typename E>
shape_info<E> shape_of(const node_ptr<E>& n) {
  if (!n) return {true, true, 0};
  const auto l = shape_of<E>(n->left);
  const auto r = shape_of<E>(n->right);
  const bool complete =
      (l.perfect && r.complete && l.height == r.height) ||
      (l.complete && r.perfect && l.height == r.height + 1);
  const bool perfect = l.perfect && r.perfect && l.height == r.height;
  return {complete, perfect, std::max(l.height, r.height) + 1};
}

template <typename E, typename Compare>
bool order_holds(const node_ptr<E>& n, const Compare& comp) {
  if (!n) return true;
  if (n->left && comp(n->left->elem, n->elem)) return false;
  if (n->right && comp(n->right->elem, n->elem)) return false;
  return order_holds<E>(n->left, comp) && order_holds<E>(n->right, comp);
}

template <typename E>
struct measured {
  bool ok;
  std::int64_t size;
  std::int64_t height;
};

template <typename E>
measured<E> remeasure(const node_ptr<E>& n) {
  if (!n) return {true, 0, 0};
  const auto l = remeasure<E>(n->left);
  const auto r = remeasure<E>(n->right);
  const std::int64_t size = l.size + r.size + 1;
  const std::int64_t height = std::max(l.height, r.height) + 1;
  return {l.ok && r.ok && size == n->size && height == n->height, size, height};
}

}  // namespace detail

// True iff the tree is complete: every level full except possibly the
// last, filled left to right. Decided from recomputed heights, never the
// cached ones.
template <typename E, typename Compare>
bool check_shape(const heap<E, Compare>& h) {
  return detail::shape_of<E>(detail::access::root(h)).complete;
}

// True iff every branch element is <= the elements of its children.
template <typename E, typename Compare>
bool check_heap_order(const heap<E, Compare>& h) {
  return detail::order_holds<E>(detail::access::root(h), h.comparator());
}

// True iff every cached size and height agrees with a bottom-up
// recomputation.
template <typename E, typename Compare>
bool check_caches(const heap<E, Compare>& h) {
  return detail::remeasure<E>(detail::access::root(h)).ok;
}

}  // namespace pheap
