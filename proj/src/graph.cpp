#include "powerindex/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "powerindex/error.hpp"

namespace powerindex {

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const VertexLabel& Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

bool Graph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& l) {
    return !std::holds_alternative<std::monostate>(l);
  });
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw InvalidVertexError("vertex " + std::to_string(v) +
                             " out of range for graph on " +
                             std::to_string(vertex_count()) + " vertices");
  }
}

GraphBuilder::GraphBuilder(std::size_t vertex_count)
    : adjacency_(vertex_count), labels_(vertex_count) {}

VertexId GraphBuilder::add_vertex(VertexLabel label) {
  adjacency_.emplace_back();
  labels_.push_back(std::move(label));
  return static_cast<VertexId>(adjacency_.size() - 1);
}

bool GraphBuilder::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw InvalidVertexError("self-loop at vertex " + std::to_string(u));
  }
  if (!adjacency_[u].insert(v).second) return false;
  adjacency_[v].insert(u);
  return true;
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].count(v) != 0;
}

void GraphBuilder::set_label(VertexId v, VertexLabel label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.offsets_.reserve(adjacency_.size() + 1);
  for (const auto& nbrs : adjacency_) {
    g.targets_.insert(g.targets_.end(), nbrs.begin(), nbrs.end());
    g.offsets_.push_back(g.targets_.size());
  }
  g.labels_ = std::move(labels_);
  adjacency_.clear();
  return g;
}

void GraphBuilder::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw InvalidVertexError("vertex " + std::to_string(v) +
                             " out of range for graph on " +
                             std::to_string(adjacency_.size()) + " vertices");
  }
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  g.check_vertex(source);
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : g.neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnreachable; });
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) {
        throw InfiniteDiameterError("graph is disconnected");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace powerindex
