#include "powerindex/shapley.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "powerindex/error.hpp"

namespace powerindex {

std::vector<Rational> shapley_shubik_uniform(int voters, int quota) {
  if (voters < 2 || voters > 10) {
    throw InvalidSizeError("brute-force index supports 2..10 voters");
  }
  if (quota < 1 || quota > voters) {
    throw InvalidSizeError("quota must lie in 1..voters");
  }
  std::vector<int> order(static_cast<std::size_t>(voters));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> pivotal(order.size(), 0);
  std::int64_t orderings = 0;
  do {
    // Unit weights: the running tally reaches the quota at position quota-1.
    ++pivotal[static_cast<std::size_t>(order[quota - 1])];
    ++orderings;
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Rational> out;
  out.reserve(pivotal.size());
  for (std::int64_t count : pivotal) out.emplace_back(count, orderings);
  return out;
}

}  // namespace powerindex
