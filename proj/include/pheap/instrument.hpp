#pragma once

#include <algorithm>
#include <cstdint>

namespace pheap {

// Events reported by the library's optional instrumentation hook.
//   comparison   - one invocation of the element comparator
//   branch_alloc - one branch node constructed
// The depth passed with every event is the number of branch levels the
// operation has walked so far (root = 1); events fired outside any walk
// report 0.
enum class op_event { comparison, branch_alloc };

template <typename P>
concept probe = requires(P p, op_event ev, int depth) {
  p.on(ev, depth);
};

// Default hook. Calls inline to nothing, so the uninstrumented
// operations pay no cost.
struct null_probe {
  void on(op_event, int) {}
};

struct op_counters {
  std::uint64_t comparisons = 0;
  std::uint64_t branch_allocations = 0;
  std::uint64_t max_recursion_depth = 0;

  void reset() { *this = op_counters{}; }
};

// Probe that accumulates into an op_counters record.
struct counting_probe {
  op_counters* counters;

  void on(op_event ev, int depth) {
    switch (ev) {
      case op_event::comparison: ++counters->comparisons; break;
      case op_event::branch_alloc: ++counters->branch_allocations; break;
    }
    counters->max_recursion_depth =
        std::max<std::uint64_t>(counters->max_recursion_depth,
                                static_cast<std::uint64_t>(depth));
  }
};

}  // namespace pheap
