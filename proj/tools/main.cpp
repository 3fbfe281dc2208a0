#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pheap: persistent binary min-heap toolkit"};
  app.require_subcommand(1);

  std::string input_path;
  auto* sort_cmd = app.add_subcommand(
      "sort", "heapsort newline-separated 64-bit integers from a file or stdin");
  sort_cmd->add_option("input", input_path, "input file (default: stdin)");

  pheap::cli::check_options copts;
  auto* check_cmd = app.add_subcommand(
      "check", "run the differential and invariant suite against the array-heap oracle");
  check_cmd->add_option("--seed", copts.seed, "pseudo-random seed")
      ->capture_default_str();
  check_cmd->add_option("--ops", copts.ops, "number of random insert/remove operations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  check_cmd->add_flag(
      "--corrupt-compare", copts.corrupt_compare,
      "fault-injection hook: invert the heap comparator; the suite must fail");

  pheap::cli::bench_options bopts;
  auto* bench_cmd = app.add_subcommand(
      "bench", "write instrumented counter and wall-time measurements as CSV");
  bench_cmd->add_option("--seed", bopts.seed, "pseudo-random seed")
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bopts.sizes, "comma-separated input sizes")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--reps", bopts.reps, "repetitions per size")
      ->capture_default_str();
  bench_cmd->add_option("--out", bopts.out_path, "output CSV path")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? pheap::cli::exit_ok : pheap::cli::exit_input_error;
  }

  if (sort_cmd->parsed()) {
    if (input_path.empty())
      return pheap::cli::run_sort(std::cin, std::cout, std::cerr);
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "sort: cannot open '" << input_path << "'\n";
      return pheap::cli::exit_input_error;
    }
    return pheap::cli::run_sort(in, std::cout, std::cerr);
  }
  if (check_cmd->parsed())
    return pheap::cli::run_check(copts, std::cout, std::cerr);
  return pheap::cli::run_bench(bopts, std::cerr);
}
