#include <chrono>
#include <fstream>
#include <ostream>
#include <vector>

#include "commands.hpp"
#include "pheap/instrument.hpp"
#include "pheap/update.hpp"
#include "rng.hpp"

namespace pheap::cli {

namespace {

using int_heap = pheap::heap<std::int64_t, int_order>;
using clock = std::chrono::steady_clock;

std::uint64_t derive_seed(std::uint64_t seed, std::int64_t n, std::int64_t rep) {
  splitmix64 mix(seed);
  mix.state ^= static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ull;
  mix.state ^= static_cast<std::uint64_t>(rep) + 0x632BE59BD9B4E019ull;
  return mix.next();
}

// one row per (operation, n, rep)
struct bench_record {
  const char* operation;
  std::int64_t n;
  std::int64_t rep;
  pheap::op_counters counters;
  std::int64_t wall_nanos;

  void write(std::ostream& csv) const {
    csv << operation << ',' << n << ',' << rep << ',' << counters.comparisons
        << ',' << counters.branch_allocations << ','
        << counters.max_recursion_depth << ',' << wall_nanos << '\n';
  }
};

}  // namespace

int run_bench(const bench_options& opts, std::ostream& err) {
  if (opts.sizes.empty()) {
    err << "bench: no sizes given\n";
    return exit_input_error;
  }
  for (const std::int64_t n : opts.sizes) {
    if (n < 1) {
      err << "bench: sizes must be >= 1, got " << n << '\n';
      return exit_input_error;
    }
  }
  if (opts.reps < 1) {
    err << "bench: reps must be >= 1, got " << opts.reps << '\n';
    return exit_input_error;
  }

  std::ofstream csv(opts.out_path, std::ios::binary);
  if (!csv) {
    err << "bench: cannot open '" << opts.out_path << "' for writing\n";
    return exit_input_error;
  }
  csv << "operation,n,rep,comparisons,allocations,depth,wall_nanos\n";

  for (const std::int64_t n : opts.sizes) {
    for (std::int64_t rep = 0; rep < opts.reps; ++rep) {
      splitmix64 rng(derive_seed(opts.seed, n, rep));
      std::vector<std::int64_t> values(static_cast<std::size_t>(n));
      for (auto& v : values) v = rng.signed64();

      pheap::op_counters counters;
      pheap::counting_probe probe{&counters};
      const auto nanos_between = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
      };

      auto t0 = clock::now();
      const int_heap h = pheap::heapify(values, int_order{}, probe);
      auto t1 = clock::now();
      bench_record{"heapify", n, rep, counters, nanos_between(t0, t1)}.write(csv);

      counters.reset();
      const std::int64_t x = rng.signed64();
      t0 = clock::now();
      const int_heap inserted = pheap::insert(h, x, probe);
      t1 = clock::now();
      bench_record{"insert", n, rep, counters, nanos_between(t0, t1)}.write(csv);
      (void)inserted;

      counters.reset();
      t0 = clock::now();
      const int_heap removed = pheap::remove(h, probe);
      t1 = clock::now();
      bench_record{"remove", n, rep, counters, nanos_between(t0, t1)}.write(csv);
      (void)removed;
    }
  }

  csv.flush();
  if (!csv) {
    err << "bench: write error on '" << opts.out_path << "'\n";
    return exit_input_error;
  }
  return exit_ok;
}

}  // namespace pheap::cli
