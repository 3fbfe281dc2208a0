#include <algorithm>
#include <array>
#include <ostream>
#include <vector>

#include "commands.hpp"
#include "pheap/invariants.hpp"
#include "pheap/oracle.hpp"
#include "pheap/update.hpp"
#include "rng.hpp"

namespace pheap::cli {

namespace {

using int_heap = pheap::heap<std::int64_t, int_order>;

enum property : int {
  prop_ordering_laws = 0,
  prop_oracle_self = 1,
  prop_min_size = 2,
  prop_shape = 3,
  prop_order = 4,
  prop_caches = 5,
  prop_multiset = 6,
  prop_drain = 7,
};

// Strict-weak-order laws on sampled triples: irreflexivity, asymmetry,
// transitivity, and transitivity of incomparability.
bool ordering_laws_hold(const int_order& lt, std::uint64_t seed) {
  splitmix64 rng(seed ^ 0x5bf0153ull);
  for (int i = 0; i < 500; ++i) {
    // small domain half the time so equal and incomparable pairs occur
    const bool narrow = rng.below(2) == 0;
    auto draw = [&] {
      return narrow ? static_cast<std::int64_t>(rng.below(8)) : rng.signed64();
    };
    const std::int64_t a = draw(), b = draw(), c = draw();
    if (lt(a, a)) return false;
    if (lt(a, b) && lt(b, a)) return false;
    if (lt(a, b) && lt(b, c) && !lt(a, c)) return false;
    const bool ab_equiv = !lt(a, b) && !lt(b, a);
    const bool bc_equiv = !lt(b, c) && !lt(c, b);
    if (ab_equiv && bc_equiv && (lt(a, c) || lt(c, a))) return false;
  }
  return true;
}

// The oracle must emit a nondecreasing drain before it may serve as
// ground truth.
bool oracle_self_check(std::uint64_t seed) {
  splitmix64 rng(seed ^ 0x0a11ce5ull);
  pheap::oracle_heap<std::int64_t> o;
  const int n = 2000;
  for (int i = 0; i < n; ++i) o.insert(rng.signed64());
  std::int64_t prev = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t v = o.delete_min();
    if (i > 0 && v < prev) return false;
    prev = v;
  }
  return o.empty();
}

bool invariants_hold(const int_heap& h, const std::vector<std::int64_t>& reference,
                     differential_failure& out, std::size_t step) {
  if (!pheap::check_shape(h)) {
    out = {prop_shape, step};
    return false;
  }
  if (!pheap::check_heap_order(h)) {
    out = {prop_order, step};
    return false;
  }
  if (!pheap::check_caches(h)) {
    out = {prop_caches, step};
    return false;
  }
  std::vector<std::int64_t> want = reference;
  std::sort(want.begin(), want.end(), h.comparator());
  if (pheap::multiset_of(h) != want) {
    out = {prop_multiset, step};
    return false;
  }
  return true;
}

}  // namespace

std::vector<heap_op> generate_ops(std::uint64_t seed, std::int64_t count) {
  splitmix64 rng(seed);
  std::vector<heap_op> ops;
  ops.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
  std::int64_t size = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    if (size == 0 || rng.below(100) < 55) {
      const std::int64_t v = rng.below(100) < 25
                                 ? static_cast<std::int64_t>(rng.below(16))
                                 : rng.signed64();
      ops.push_back({true, v});
      ++size;
    } else {
      ops.push_back({false, 0});
      --size;
    }
  }
  return ops;
}

std::optional<differential_failure> run_differential(
    const std::vector<heap_op>& ops, bool corrupt_compare,
    std::size_t invariant_stride) {
  if (invariant_stride == 0) invariant_stride = 1;
  int_heap h{int_order{corrupt_compare}};
  pheap::oracle_heap<std::int64_t> oracle;
  std::vector<std::int64_t> reference;
  differential_failure f{};

  for (std::size_t i = 0; i < ops.size(); ++i) {
    const heap_op& o = ops[i];
    if (o.is_insert) {
      h = pheap::insert(h, o.value);
      oracle.insert(o.value);
      reference.push_back(o.value);
    } else {
      if (h.is_empty() || oracle.empty()) {
        if (h.is_empty() != oracle.empty()) return differential_failure{prop_min_size, i};
        continue;
      }
      const std::int64_t got = h.minimum();
      const std::int64_t want = oracle.delete_min();
      if (got != want) return differential_failure{prop_min_size, i};
      h = pheap::remove(h);
      reference.erase(std::find(reference.begin(), reference.end(), want));
    }
    if (h.size() != oracle.size()) return differential_failure{prop_min_size, i};
    if (!h.is_empty() && h.minimum() != oracle.min())
      return differential_failure{prop_min_size, i};
    if (i % invariant_stride == 0 || i + 1 == ops.size()) {
      if (!invariants_hold(h, reference, f, i)) return f;
    }
  }

  // drain both step for step; the persistent side must come out
  // nondecreasing and agree with the oracle on every element
  const std::size_t end_step = ops.size();
  std::int64_t prev = 0;
  bool have_prev = false;
  while (!h.is_empty() || !oracle.empty()) {
    if (h.is_empty() != oracle.empty())
      return differential_failure{prop_drain, end_step};
    const std::int64_t got = h.minimum();
    if (got != oracle.delete_min()) return differential_failure{prop_drain, end_step};
    if (have_prev && got < prev) return differential_failure{prop_drain, end_step};
    prev = got;
    have_prev = true;
    h = pheap::remove(h);
  }
  return std::nullopt;
}

std::vector<heap_op> shrink_failing(std::vector<heap_op> ops, bool corrupt_compare) {
  const auto fails = [&](const std::vector<heap_op>& seq) {
    return run_differential(seq, corrupt_compare, 1).has_value();
  };
  const auto first = run_differential(ops, corrupt_compare, 1);
  if (!first) return ops;
  if (first->step + 1 < ops.size()) ops.resize(first->step + 1);

  for (std::size_t chunk = std::max<std::size_t>(ops.size() / 2, 1); chunk >= 1;
       chunk /= 2) {
    std::size_t start = 0;
    while (start + chunk <= ops.size() && ops.size() > 1) {
      std::vector<heap_op> candidate;
      candidate.reserve(ops.size() - chunk);
      candidate.insert(candidate.end(), ops.begin(),
                       ops.begin() + static_cast<std::ptrdiff_t>(start));
      candidate.insert(candidate.end(),
                       ops.begin() + static_cast<std::ptrdiff_t>(start + chunk),
                       ops.end());
      if (fails(candidate)) {
        ops = std::move(candidate);
      } else {
        ++start;
      }
    }
    if (chunk == 1) break;
  }
  return ops;
}

int run_check(const check_options& opts, std::ostream& out, std::ostream& err) {
  std::array<bool, differential_property_count> pass;
  pass.fill(true);

  pass[prop_ordering_laws] = ordering_laws_hold(int_order{opts.corrupt_compare}, opts.seed);
  pass[prop_oracle_self] = oracle_self_check(opts.seed);

  const std::vector<heap_op> ops = generate_ops(opts.seed, opts.ops);
  const auto failure = run_differential(ops, opts.corrupt_compare, 37);
  if (failure) pass[failure->property] = false;

  for (int i = 0; i < differential_property_count; ++i)
    out << (pass[i] ? "PASS " : "FAIL ") << differential_property_names[i] << '\n';

  const bool all_pass =
      std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
  if (all_pass) {
    out << "result: PASS (" << opts.ops << " ops, seed " << opts.seed << ")\n";
    return exit_ok;
  }

  if (failure) {
    const std::vector<heap_op> minimal = shrink_failing(ops, opts.corrupt_compare);
    out << "counterexample (" << minimal.size() << " ops):";
    for (const heap_op& o : minimal) {
      if (o.is_insert)
        out << " insert(" << o.value << ")";
      else
        out << " remove";
    }
    out << '\n';
  }
  err << "check: property failure (seed " << opts.seed << ")\n";
  out << "result: FAIL\n";
  return exit_property_failure;
}

}  // namespace pheap::cli
