#ifndef POWERINDEX_RULE90_HPP
#define POWERINDEX_RULE90_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace powerindex {

/// Cells of a ring automaton; index arithmetic is mod size().
class CAState {
 public:
  CAState() = default;
  explicit CAState(std::size_t size) : cells_(size) {}

  /// Ring of `size` dead cells except `cell`.
  static CAState single_seed(std::size_t size, std::size_t cell = 0);
  /// "00100" -> cell 2 live. Throws Error on characters other than 0/1.
  static CAState from_string(std::string_view text);

  std::size_t size() const noexcept { return cells_.size(); }
  bool live(std::size_t i) const { return cells_.test(i % size()); }
  void set(std::size_t i, bool alive) { cells_.set(i % size(), alive); }

  std::size_t live_count() const { return cells_.count(); }
  std::vector<int> live_cells() const;
  std::string to_string() const;

  friend CAState operator^(const CAState& a, const CAState& b);
  friend bool operator==(const CAState&, const CAState&) = default;

  std::size_t hash() const;

 private:
  friend CAState rule90_step(const CAState& s);

  boost::dynamic_bitset<std::uint64_t> cells_;
};

struct CAStateHash {
  std::size_t operator()(const CAState& s) const { return s.hash(); }
};

/// Cell i becomes live iff exactly one of cells i-1, i+1 was live.
/// Requires size() >= 3; throws InvalidSizeError otherwise.
CAState rule90_step(const CAState& s);

/// [seed, step(seed), ..., step^steps(seed)].
std::vector<CAState> rule90_evolve(const CAState& seed, std::size_t steps);

struct OrbitShape {
  std::size_t transient = 0;
  std::size_t period = 0;
  friend bool operator==(const OrbitShape&, const OrbitShape&) = default;
};

/// Transient and minimal period of the orbit of `seed`.
OrbitShape rule90_orbit_shape(const CAState& seed);

/// Orbit shape of the ring of length n seeded with the single live cell 0.
OrbitShape rule90_period(int n);

}  // namespace powerindex

#endif  // POWERINDEX_RULE90_HPP
