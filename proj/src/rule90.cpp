#include "powerindex/rule90.hpp"

#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "powerindex/error.hpp"

namespace powerindex {

CAState CAState::single_seed(std::size_t size, std::size_t cell) {
  CAState s(size);
  s.set(cell, true);
  return s;
}

CAState CAState::from_string(std::string_view text) {
  CAState s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      s.cells_.set(i);
    } else if (text[i] != '0') {
      throw Error("cell strings use only '0' and '1'");
    }
  }
  return s;
}

std::vector<int> CAState::live_cells() const {
  std::vector<int> out;
  for (auto i = cells_.find_first(); i != decltype(cells_)::npos;
       i = cells_.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string CAState::to_string() const {
  std::string out(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) {
    if (cells_.test(i)) out[i] = '1';
  }
  return out;
}

CAState operator^(const CAState& a, const CAState& b) {
  CAState out = a;
  out.cells_ ^= b.cells_;
  return out;
}

std::size_t CAState::hash() const {
  return boost::hash<decltype(cells_)>{}(cells_);
}

CAState rule90_step(const CAState& s) {
  const std::size_t n = s.size();
  if (n < 3) throw InvalidSizeError("Rule 90 ring needs at least 3 cells");
  // left[i] = s[i-1], right[i] = s[i+1], both with wrap-around.
  const auto left = (s.cells_ << 1) | (s.cells_ >> (n - 1));
  const auto right = (s.cells_ >> 1) | (s.cells_ << (n - 1));
  CAState next(n);
  next.cells_ = left ^ right;
  return next;
}

std::vector<CAState> rule90_evolve(const CAState& seed, std::size_t steps) {
  std::vector<CAState> out{seed};
  out.reserve(steps + 1);
  for (std::size_t t = 0; t < steps; ++t) out.push_back(rule90_step(out.back()));
  return out;
}

OrbitShape rule90_orbit_shape(const CAState& seed) {
  std::unordered_map<CAState, std::size_t, CAStateHash> seen;
  CAState s = seed;
  for (std::size_t t = 0;; ++t) {
    const auto [it, inserted] = seen.emplace(s, t);
    if (!inserted) return {it->second, t - it->second};
    s = rule90_step(s);
  }
}

OrbitShape rule90_period(int n) {
  if (n < 3) throw InvalidSizeError("Rule 90 ring needs at least 3 cells");
  return rule90_orbit_shape(CAState::single_seed(static_cast<std::size_t>(n)));
}

}  // namespace powerindex
