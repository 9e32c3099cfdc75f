#include "powerindex/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "powerindex/error.hpp"

namespace powerindex {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidSizeError(message);
}

void add_clique(GraphBuilder& b, VertexId first, std::size_t size) {
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t c = a + 1; c < size; ++c) {
      b.add_edge(first + static_cast<VertexId>(a),
                 first + static_cast<VertexId>(c));
    }
  }
}

Graph build_gjn(int j, int n, std::mt19937_64* shuffle) {
  require(j >= 1 && n >= 1, "clique chain needs j >= 1 and n >= 1");
  require(n <= 20, "clique chain depth n must be <= 20");
  GraphBuilder b;
  std::vector<VertexId> level_start;
  for (int level = 0; level <= n; ++level) {
    const std::size_t size = static_cast<std::size_t>(j) << level;
    level_start.push_back(static_cast<VertexId>(b.vertex_count()));
    for (std::size_t t = 0; t < size; ++t) {
      b.add_vertex(CliqueLevelLabel{level});
    }
    add_clique(b, level_start.back(), size);
  }
  for (int level = 0; level < n; ++level) {
    const std::size_t size = static_cast<std::size_t>(j) << level;
    std::vector<VertexId> upper(2 * size);
    std::iota(upper.begin(), upper.end(), level_start[level + 1]);
    if (shuffle != nullptr) std::shuffle(upper.begin(), upper.end(), *shuffle);
    for (std::size_t t = 0; t < size; ++t) {
      const VertexId v = level_start[level] + static_cast<VertexId>(t);
      b.add_edge(v, upper[2 * t]);
      b.add_edge(v, upper[2 * t + 1]);
    }
  }
  return std::move(b).build();
}

}  // namespace

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  GraphBuilder b(static_cast<std::size_t>(n));
  add_clique(b, 0, static_cast<std::size_t>(n));
  return std::move(b).build();
}

Graph make_complete_bipartite(int a, int c) {
  require(a >= 1 && c >= 1, "complete bipartite graph needs both sides >= 1");
  GraphBuilder b(static_cast<std::size_t>(a + c));
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < c; ++v) b.add_edge(u, a + v);
  }
  return std::move(b).build();
}

Graph make_petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

Graph make_bowtie() {
  GraphBuilder b(5);
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(2, 4);
  b.add_edge(3, 4);
  return std::move(b).build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  require(g.vertex_count() > 0 && h.vertex_count() > 0,
          "cartesian product needs nonempty factors");
  const auto hn = static_cast<VertexId>(h.vertex_count());
  GraphBuilder b;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId x = 0; x < hn; ++x) b.add_vertex(ProductLabel{a, x});
  }
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId x = 0; x < hn; ++x) {
      for (VertexId y : h.neighbors(x)) {
        if (x < y) b.add_edge(a * hn + x, a * hn + y);
      }
      for (VertexId c : g.neighbors(a)) {
        if (a < c) b.add_edge(a * hn + x, c * hn + x);
      }
    }
  }
  return std::move(b).build();
}

Graph make_gjn(int j, int n) { return build_gjn(j, n, nullptr); }

Graph make_gjn(int j, int n, std::uint64_t shuffle_seed) {
  std::mt19937_64 rng(shuffle_seed);
  return build_gjn(j, n, &rng);
}

Graph make_prism(int j) {
  require(j >= 3, "prism K_{j-1} x C_4 needs j >= 3");
  // C_4 first so that each layer is a contiguous id range.
  const Graph product = cartesian_product(make_cycle(4), make_complete(j - 1));
  GraphBuilder b(product.vertex_count());
  for (const auto& [u, v] : product.edges()) b.add_edge(u, v);
  for (VertexId v = 0; v < product.vertex_count(); ++v) {
    const auto& coords = std::get<ProductLabel>(product.label(v));
    b.set_label(v, PrismLabel{static_cast<int>(coords.left),
                              static_cast<int>(coords.right)});
  }
  return std::move(b).build();
}

std::size_t HnlLayout::vertex_count() const {
  return static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(1 + ell);
}

VertexId HnlLayout::ring(int column, int row) const {
  return static_cast<VertexId>((row - 1) * n + column);
}

VertexId HnlLayout::clique(int column, int row, int slot) const {
  return static_cast<VertexId>(2 * n + ((row - 1) * n + column) * ell + slot);
}

Graph make_hnl(int n, int ell) {
  require(n >= 4 && n % 2 == 0, "ring length n must be even and >= 4");
  require(ell >= 3, "hanging clique size ell must be >= 3");
  const HnlLayout layout{n, ell};
  GraphBuilder b(layout.vertex_count());
  for (int row = 1; row <= 2; ++row) {
    for (int i = 0; i < n; ++i) {
      b.set_label(layout.ring(i, row), HnlLabel{i, row, HnlRole::kCycle, 0});
      b.set_label(layout.clique(i, row, 0),
                  HnlLabel{i, row, HnlRole::kPendant, 0});
      for (int slot = 1; slot < ell; ++slot) {
        b.set_label(layout.clique(i, row, slot),
                    HnlLabel{i, row, HnlRole::kCliqueExtra, slot});
      }
      b.add_edge(layout.ring(i, row), layout.ring((i + 1) % n, row));
      b.add_edge(layout.ring(i, row), layout.clique(i, row, 0));
      add_clique(b, layout.clique(i, row, 0), static_cast<std::size_t>(ell));
    }
  }
  for (int i = 0; i < n; ++i) b.add_edge(layout.ring(i, 1), layout.ring(i, 2));
  return std::move(b).build();
}

Graph attach_graph(const Graph& host, const Graph& s_graph, VertexId s_anchor,
                   VertexId host_anchor) {
  host.check_vertex(host_anchor);
  s_graph.check_vertex(s_anchor);
  if (std::holds_alternative<HnlLabel>(host.label(host_anchor)) &&
      host.degree(host_anchor) != 2) {
    throw InvalidVertexError("host anchor " + std::to_string(host_anchor) +
                             " must have degree 2");
  }
  GraphBuilder b;
  for (VertexId v = 0; v < host.vertex_count(); ++v) {
    b.add_vertex(host.label(v));
  }
  const auto offset = static_cast<VertexId>(host.vertex_count());
  for (VertexId v = 0; v < s_graph.vertex_count(); ++v) {
    b.add_vertex(s_graph.label(v));
  }
  for (const auto& [u, v] : host.edges()) b.add_edge(u, v);
  for (const auto& [u, v] : s_graph.edges()) b.add_edge(offset + u, offset + v);
  b.add_edge(host_anchor, offset + s_anchor);
  return std::move(b).build();
}

}  // namespace powerindex
