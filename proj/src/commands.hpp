#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pheap::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_property_failure = 1;
inline constexpr int exit_input_error = 2;

// Natural order on 64-bit integers, invertible at runtime. The inversion
// is the `check` command's fault-injection hook: it corrupts the
// comparisons of the persistent heap only, so the differential suite must
// catch it.
struct int_order {
  bool inverted = false;
  bool operator()(std::int64_t a, std::int64_t b) const {
    return inverted ? b < a : a < b;
  }
};

// sort: read newline-separated 64-bit signed integers, heapsort them,
// write one per line. Malformed or out-of-range lines are diagnosed on err
// with their line number.
int run_sort(std::istream& in, std::ostream& out, std::ostream& err);

// --- differential harness (shared by the check command and the test
// --- suites)

struct heap_op {
  bool is_insert;
  std::int64_t value;  // inserts only
};

inline constexpr const char* differential_property_names[] = {
    "ordering-laws",        "oracle-self-sorted", "min-size-agreement",
    "shape-invariant",      "heap-order-invariant", "cache-invariant",
    "multiset-conservation", "drain-agreement",
};
inline constexpr int differential_property_count = 8;

struct differential_failure {
  int property;      // index into differential_property_names
  std::size_t step;  // op index at which the violation surfaced
};

// Deterministic op sequence for a seed: insert-biased so heaps grow, with
// occasional narrow-range values to exercise duplicate keys. Removes are
// never generated against an empty heap.
std::vector<heap_op> generate_ops(std::uint64_t seed, std::int64_t count);

// Replays ops against both the persistent heap and the array-heap oracle,
// comparing (minimum, size) after every op and running the full invariant
// suite every invariant_stride steps plus at the end, then drains both
// heaps step for step. Returns the first violation, if any. A remove
// replayed against an empty heap (possible after shrinking) is skipped on
// both sides.
std::optional<differential_failure> run_differential(
    const std::vector<heap_op>& ops, bool corrupt_compare,
    std::size_t invariant_stride);

// Shrinks a failing sequence: truncates at the failure, then drops chunks
// of halving size while the result still fails.
std::vector<heap_op> shrink_failing(std::vector<heap_op> ops,
                                    bool corrupt_compare);

struct check_options {
  std::uint64_t seed = 1;
  std::int64_t ops = 10000;
  bool corrupt_compare = false;
};

// check: run the differential/invariant suite, print one PASS/FAIL line
// per property, print a minimal counterexample on failure.
int run_check(const check_options& opts, std::ostream& out, std::ostream& err);

struct bench_options {
  std::uint64_t seed = 1;
  std::vector<std::int64_t> sizes = {1023, 16383, 262143};
  std::int64_t reps = 5;
  std::string out_path = "bench.csv";
};

// bench: measure instrumented counters and wall time for heapify, insert
// and remove at each size, one CSV row per (operation, n, rep). Counter
// columns are deterministic for a fixed seed; wall_nanos is not.
int run_bench(const bench_options& opts, std::ostream& err);

}  // namespace pheap::cli
