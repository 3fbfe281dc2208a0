#pragma once

// Persistent binary min-heap.
//
// A heap value is an immutable handle to a complete, heap-ordered binary
// tree. Every node caches the size and height of its subtree, so both are
// O(1) accessors; the cached fields are what make the logarithmic spot
// search of insert/remove possible. Derived heaps share every subtree the
// producing operation did not touch, and no operation ever mutates an
// existing node, so any number of versions stay valid side by side and may
// be read concurrently without synchronization.
//
// Update algorithms (insert, remove, heapify, ...) live in update.hpp;
// invariant checkers in invariants.hpp.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>

#include "pheap/instrument.hpp"

namespace pheap {

struct empty_heap_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

template <typename E>
struct node {
  E elem;
  std::shared_ptr<const node> left;
  std::shared_ptr<const node> right;
  std::int64_t size;
  std::int64_t height;
};

template <typename E>
using node_ptr = std::shared_ptr<const node<E>>;

template <typename E>
std::int64_t size_of(const node_ptr<E>& n) {
  return n ? n->size : 0;
}

template <typename E>
std::int64_t height_of(const node_ptr<E>& n) {
  return n ? n->height : 0;
}

// A subtree is perfect iff it holds 2^height - 1 nodes. Exact shift
// arithmetic; no floating point.
template <typename E>
bool perfect(const node_ptr<E>& n) {
  return size_of(n) == (std::int64_t{1} << height_of(n)) - 1;
}

// The one place branch nodes are built: caches are computed here and
// nowhere else. Order between x and the children is the caller's business.
template <typename E, probe P>
node_ptr<E> make_node(E x, node_ptr<E> l, node_ptr<E> r, P& pr, int depth) {
  pr.on(op_event::branch_alloc, depth);
  const std::int64_t size = size_of(l) + size_of(r) + 1;
  const std::int64_t height = std::max(height_of(l), height_of(r)) + 1;
  return std::make_shared<const node<E>>(
      node<E>{std::move(x), std::move(l), std::move(r), size, height});
}

template <typename E, typename Compare, probe P>
bool less(const Compare& comp, const E& a, const E& b, P& pr, int depth) {
  pr.on(op_event::comparison, depth);
  return comp(a, b);
}

struct access;

}  // namespace detail

template <typename E, typename Compare = std::less<E>>
class heap {
 public:
  using element_type = E;
  using compare_type = Compare;

  // An empty heap (the Leaf of the representation).
  heap() = default;
  explicit heap(Compare comp) : comp_(std::move(comp)) {}

  bool is_empty() const noexcept { return root_ == nullptr; }

  // Node count / level count of the whole tree, from the cached fields.
  // Both are 0 for the empty heap; a singleton has height 1.
  std::int64_t size() const noexcept { return detail::size_of(root_); }
  std::int64_t height() const noexcept { return detail::height_of(root_); }

  // Least element of the stored multiset. O(1).
  const E& minimum() const {
    ensure_nonempty("minimum of empty heap");
    return root_->elem;
  }

  // Root element; identical to minimum() on a well-formed heap but named
  // for contexts (checker internals, tests) where order may not hold.
  const E& element() const {
    ensure_nonempty("element of empty heap");
    return root_->elem;
  }

  heap left() const {
    ensure_nonempty("left of empty heap");
    return heap(root_->left, comp_);
  }

  heap right() const {
    ensure_nonempty("right of empty heap");
    return heap(root_->right, comp_);
  }

  // True iff the tree holds exactly 2^height - 1 nodes.
  bool is_perfect() const noexcept { return detail::perfect(root_); }

  const Compare& comparator() const noexcept { return comp_; }

 private:
  heap(detail::node_ptr<E> root, Compare comp)
      : root_(std::move(root)), comp_(std::move(comp)) {}

  void ensure_nonempty(const char* what) const {
    if (!root_) throw empty_heap_error(what);
  }

  detail::node_ptr<E> root_;
  [[no_unique_address]] Compare comp_{};

  friend struct detail::access;
};

namespace detail {

// Internal bridge between the heap handle and node-level algorithms.
struct access {
  template <typename E, typename Compare>
  static const node_ptr<E>& root(const heap<E, Compare>& h) {
    return h.root_;
  }

  template <typename E, typename Compare>
  static heap<E, Compare> wrap(node_ptr<E> root, Compare comp) {
    return heap<E, Compare>(std::move(root), std::move(comp));
  }
};

}  // namespace detail

// The canonical empty heap.
template <typename E, typename Compare = std::less<E>>
heap<E, Compare> make_leaf(Compare comp = Compare{}) {
  return heap<E, Compare>(std::move(comp));
}

// Smart constructor: the sole public way to assemble a branch. Computes
// the cached size and height from the children, which are shared, never
// copied. Does not enforce heap order (callers do).
template <typename E, typename Compare = std::less<E>>
heap<E, Compare> make_heap(E x, heap<E, Compare> l = {}, heap<E, Compare> r = {}) {
  null_probe pr;
  Compare comp = l.comparator();
  return detail::access::wrap<E, Compare>(
      detail::make_node<E>(std::move(x), detail::access::root(l),
                           detail::access::root(r), pr, 0),
      std::move(comp));
}

// Deep element-wise equality of shape and contents. Comparators are not
// part of the comparison. Shared subtrees short-circuit.
template <typename E, typename Compare>
bool structurally_equal(const heap<E, Compare>& a, const heap<E, Compare>& b) {
  struct rec {
    static bool eq(const detail::node_ptr<E>& x, const detail::node_ptr<E>& y) {
      if (x == y) return true;
      if (!x || !y) return false;
      return x->elem == y->elem && eq(x->left, y->left) && eq(x->right, y->right);
    }
  };
  return rec::eq(detail::access::root(a), detail::access::root(b));
}

template <typename E, typename Compare>
bool operator==(const heap<E, Compare>& a, const heap<E, Compare>& b) {
  return structurally_equal(a, b);
}

}  // namespace pheap
