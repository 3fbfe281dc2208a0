#pragma once

// Independent ground truth for differential and exhaustive testing: a
// classical mutable array-based binary min-heap plus brute-force shape and
// multiset utilities. Deliberately shares no code with the persistent
// implementation, down to its own comparison call; it is test harness
// machinery, not part of the library API, and is single-threaded.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pheap/heap.hpp"

namespace pheap {

template <typename E, typename Compare = std::less<E>>
class oracle_heap {
 public:
  explicit oracle_heap(Compare comp = Compare{}) : lt_(std::move(comp)) {}

  std::int64_t size() const { return static_cast<std::int64_t>(slots_.size()); }
  bool empty() const { return slots_.empty(); }

  void insert(const E& x) {
    slots_.push_back(x);
    std::size_t i = slots_.size() - 1;
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!lt_(slots_[i], slots_[parent])) break;
      std::swap(slots_[i], slots_[parent]);
      i = parent;
    }
  }

  const E& min() const {
    if (slots_.empty()) throw std::logic_error("oracle min on empty heap");
    return slots_[0];
  }

  E delete_min() {
    if (slots_.empty()) throw std::logic_error("oracle delete on empty heap");
    E out = slots_[0];
    slots_[0] = slots_.back();
    slots_.pop_back();
    std::size_t i = 0;
    while (true) {
      const std::size_t l = 2 * i + 1;
      const std::size_t r = 2 * i + 2;
      std::size_t smallest = i;
      if (l < slots_.size() && lt_(slots_[l], slots_[smallest])) smallest = l;
      if (r < slots_.size() && lt_(slots_[r], slots_[smallest])) smallest = r;
      if (smallest == i) break;
      std::swap(slots_[i], slots_[smallest]);
      i = smallest;
    }
    return out;
  }

 private:
  std::vector<E> slots_;
  Compare lt_;
};

// Number of level-order indices that fall inside the subtree rooted at
// index i of a complete tree with n nodes (children of i are 2i+1, 2i+2).
inline std::int64_t level_order_subtree_size(std::int64_t i, std::int64_t n) {
  if (i >= n) return 0;
  return 1 + level_order_subtree_size(2 * i + 1, n) +
         level_order_subtree_size(2 * i + 2, n);
}

// Sizes of the root's left and right subtrees in the unique complete-tree
// shape on n nodes.
inline std::pair<std::int64_t, std::int64_t> level_order_split(std::int64_t n) {
  if (n <= 0) return {0, 0};
  return {level_order_subtree_size(1, n), level_order_subtree_size(2, n)};
}

// True iff the tree has exactly the shape of the level-order array layout
// on n nodes: a node exists at index i iff i < n.
template <typename E, typename Compare>
bool shape_matches_level_order(const heap<E, Compare>& h, std::int64_t n) {
  struct rec {
    static bool match(const detail::node_ptr<E>& node, std::int64_t i, std::int64_t n) {
      if (!node) return i >= n;
      if (i >= n) return false;
      return match(node->left, 2 * i + 1, n) && match(node->right, 2 * i + 2, n);
    }
  };
  return rec::match(detail::access::root(h), 0, n);
}

// All stored elements as a sorted sequence, for conservation checks.
template <typename E, typename Compare>
std::vector<E> multiset_of(const heap<E, Compare>& h) {
  std::vector<E> out;
  out.reserve(static_cast<std::size_t>(h.size()));
  struct rec {
    static void collect(const detail::node_ptr<E>& n, std::vector<E>& out) {
      if (!n) return;
      collect(n->left, out);
      out.push_back(n->elem);
      collect(n->right, out);
    }
  };
  rec::collect(detail::access::root(h), out);
  std::sort(out.begin(), out.end(), h.comparator());
  return out;
}

}  // namespace pheap
