#ifndef POWERINDEX_GENERATORS_HPP
#define POWERINDEX_GENERATORS_HPP

#include <cstddef>
#include <cstdint>

#include "powerindex/graph.hpp"

namespace powerindex {

// All generators throw InvalidSizeError when a size parameter is outside its
// documented domain.

/// Path on n >= 1 vertices, 0-1-...-(n-1).
Graph make_path(int n);

/// Cycle on n >= 3 vertices.
Graph make_cycle(int n);

/// K_n, n >= 1.
Graph make_complete(int n);

/// K_{a,b}; the first a ids form one side.
Graph make_complete_bipartite(int a, int b);

/// The Petersen graph: outer 5-cycle 0..4, spokes i~i+5, inner pentagram.
Graph make_petersen();

/// Two triangles sharing a centre: ids (a0, a1, m, b0, b1) = (0, 1, 2, 3, 4).
Graph make_bowtie();

/// Vertex (a, x) gets id a * |V(h)| + x and a ProductLabel{a, x}.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Clique chain K_j, K_{2j}, ..., K_{j 2^n}. Cliques occupy consecutive id
/// ranges by level. Vertex t of level i < n is joined to vertices 2t and
/// 2t+1 of level i+1, so every level-(i+1) vertex has one neighbour below.
/// Requires j >= 1 and n >= 1.
Graph make_gjn(int j, int n);

/// Same degree constraints as make_gjn, but each level's upper endpoints are
/// a seeded random permutation of the next clique.
Graph make_gjn(int j, int n, std::uint64_t shuffle_seed);

/// K_{j-1} x C_4, labelled by layer. Layer L occupies ids
/// L*(j-1) .. L*(j-1)+j-2 and each vertex is joined to its copy in layers
/// L +- 1 (mod 4). Requires j >= 3; the result is j-regular.
Graph make_prism(int j);

/// Vertex numbering of make_hnl. Ring vertex v_{i,r} has id (r-1)*n + i;
/// the clique hanging off it occupies `ell` consecutive ids starting at
/// 2n + ((r-1)*n + i) * ell, slot 0 being the pendant z_{i,r}.
struct HnlLayout {
  int n = 0;
  int ell = 3;

  std::size_t vertex_count() const;
  VertexId ring(int column, int row) const;
  VertexId clique(int column, int row, int slot) const;
};

/// C_n x P_2 with a K_ell hung from every ring vertex by a pendant edge.
/// Requires even n >= 4 and ell >= 3.
Graph make_hnl(int n, int ell = 3);

/// Disjoint union of host and s_graph (ids shifted by host.vertex_count())
/// plus the bridge s_anchor~host_anchor. If the host anchor is a vertex of
/// a make_hnl graph it must have degree 2 there.
/// Throws InvalidVertexError for an out-of-range or ineligible anchor.
Graph attach_graph(const Graph& host, const Graph& s_graph, VertexId s_anchor,
                   VertexId host_anchor);

}  // namespace powerindex

#endif  // POWERINDEX_GENERATORS_HPP
