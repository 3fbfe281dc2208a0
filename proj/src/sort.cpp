#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "commands.hpp"
#include "pheap/update.hpp"

namespace pheap::cli {

namespace {

// Strict decimal int64: optional minus, digits, nothing else. Values
// outside the 64-bit signed range are rejected, not saturated. A trailing
// carriage return (CRLF input) is tolerated.
bool parse_int64(std::string_view text, std::int64_t& out) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

int run_sort(std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::int64_t v = 0;
    if (!parse_int64(line, v)) {
      err << "sort: line " << line_no << ": not a 64-bit signed integer: '"
          << line << "'\n";
      return exit_input_error;
    }
    values.push_back(v);
  }

  auto h = pheap::heapify(values, int_order{});
  while (!h.is_empty()) {
    out << h.minimum() << '\n';
    h = pheap::remove(h);
  }
  return exit_ok;
}

}  // namespace pheap::cli
