#ifndef POWERINDEX_GRAPH_HPP
#define POWERINDEX_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace powerindex {

using VertexId = std::uint32_t;

/// Level of the clique a vertex belongs to in a clique chain (0 = smallest).
struct CliqueLevelLabel {
  int level = 0;
  friend bool operator==(const CliqueLevelLabel&, const CliqueLevelLabel&) = default;
};

enum class HnlRole : std::uint8_t {
  kCycle,        // v_{i,j}, on one of the two ring copies
  kPendant,      // z_{i,j}, the clique vertex joined to v_{i,j}
  kCliqueExtra,  // remaining clique vertices (x, y when the clique is K_3)
};

/// Position of a vertex in the ring-ladder-with-cliques graph.
/// `row` is 1 or 2; `slot` is 0 for ring and pendant vertices and 1.. for
/// clique extras (slot 1 = x, slot 2 = y for K_3).
struct HnlLabel {
  int column = 0;
  int row = 1;
  HnlRole role = HnlRole::kCycle;
  int slot = 0;
  friend bool operator==(const HnlLabel&, const HnlLabel&) = default;
};

/// Layer 0..3 of K_m x C_4, plus the vertex's index inside its layer.
struct PrismLabel {
  int layer = 0;
  int index = 0;
  friend bool operator==(const PrismLabel&, const PrismLabel&) = default;
};

/// Coordinates of a cartesian product vertex.
struct ProductLabel {
  VertexId left = 0;
  VertexId right = 0;
  friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
};

/// Optional role metadata attached by generators. Dynamics never reads it.
using VertexLabel = std::variant<std::monostate, CliqueLevelLabel, HnlLabel,
                                 PrismLabel, ProductLabel>;

/// Immutable simple undirected graph in compressed adjacency form.
/// Vertex ids are 0..vertex_count()-1 and neighbour lists are sorted.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  const VertexLabel& label(VertexId v) const;
  /// True if at least one vertex carries a label.
  bool has_labels() const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Throws InvalidVertexError unless v < vertex_count().
  void check_vertex(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<VertexLabel> labels_;
};

/// Accumulates vertices and edges, rejecting self-loops and duplicates.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count = 0);

  VertexId add_vertex(VertexLabel label = {});
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  /// Adds u~v. Returns false (and changes nothing) if the edge exists.
  /// Throws InvalidVertexError on a self-loop or an out-of-range id.
  bool add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  void set_label(VertexId v, VertexLabel label);

  Graph build() &&;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::set<VertexId>> adjacency_;
  std::vector<VertexLabel> labels_;
};

inline constexpr std::size_t kUnreachable =
    std::numeric_limits<std::size_t>::max();

/// Hop distances from `source`; kUnreachable for other components.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

bool is_connected(const Graph& g);

/// Largest BFS distance over all pairs. Throws InfiniteDiameterError on a
/// disconnected graph.
std::size_t diameter(const Graph& g);

/// Degrees sorted ascending.
std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace powerindex

#endif  // POWERINDEX_GRAPH_HPP
