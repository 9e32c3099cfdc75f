#ifndef POWERINDEX_CONFIGURATION_HPP
#define POWERINDEX_CONFIGURATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/dynamic_bitset.hpp>

#include "powerindex/graph.hpp"

namespace powerindex {

enum class Strategy : std::uint8_t { kDefector = 0, kCollaborator = 1 };

inline Strategy opposite(Strategy s) {
  return s == Strategy::kCollaborator ? Strategy::kDefector
                                      : Strategy::kCollaborator;
}

/// Strategy per vertex, bit-packed (set bit = collaborator).
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t size, Strategy fill = Strategy::kDefector);

  /// "CCDD..." in vertex order. Throws ConfigurationError on other chars.
  static Configuration from_string(std::string_view text);

  /// Vertex v is a collaborator iff bit v of `bits` is set. size <= 64.
  static Configuration from_bits(std::size_t size, std::uint64_t bits);

  std::size_t size() const noexcept { return bits_.size(); }

  Strategy at(VertexId v) const {
    return bits_.test(v) ? Strategy::kCollaborator : Strategy::kDefector;
  }
  bool is_collaborator(VertexId v) const { return bits_.test(v); }

  void set(VertexId v, Strategy s) {
    bits_.set(v, s == Strategy::kCollaborator);
  }
  void flip(VertexId v) { bits_.flip(v); }

  std::size_t collaborator_count() const { return bits_.count(); }
  bool all_collaborators() const { return bits_.all(); }
  bool all_defectors() const { return bits_.none(); }

  std::string to_string() const;

  /// Every vertex switches strategy.
  Configuration complement() const;

  /// Throws ConfigurationError unless size() == g.vertex_count().
  void require_fits(const Graph& g) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

  std::size_t hash() const;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const { return c.hash(); }
};

}  // namespace powerindex

#endif  // POWERINDEX_CONFIGURATION_HPP
