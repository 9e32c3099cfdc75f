#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "powerindex/error.hpp"
#include "powerindex/generators.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/graph_io.hpp"

using namespace powerindex;

namespace {

bool is_regular(const Graph& g, std::size_t d) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

bool induces_clique(const Graph& g, const std::vector<VertexId>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!g.has_edge(vs[a], vs[b])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("builder rejects self-loops and reports duplicates") {
  GraphBuilder b(3);
  CHECK(b.add_edge(0, 1));
  CHECK_FALSE(b.add_edge(1, 0));
  CHECK_THROWS_AS(b.add_edge(2, 2), InvalidVertexError);
  CHECK_THROWS_AS(b.add_edge(0, 3), InvalidVertexError);
  const Graph g = std::move(b).build();
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("paths") {
  CHECK(make_path(1).vertex_count() == 1);
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_path(2).edge_count() == 1);
  CHECK(degree_sequence(make_path(5)) ==
        std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(diameter(make_path(5)) == 4);
  CHECK_THROWS_AS(make_path(0), InvalidSizeError);
}

TEST_CASE("cycles") {
  CHECK(make_cycle(3).edge_count() == 3);
  CHECK(make_cycle(4).edge_count() == 4);
  CHECK(diameter(make_cycle(4)) == 2);
  CHECK(make_cycle(8).edge_count() == 8);
  CHECK(is_regular(make_cycle(8), 2));
  CHECK(diameter(make_cycle(8)) == 4);
  CHECK_THROWS_AS(make_cycle(2), InvalidSizeError);
}

TEST_CASE("complete graphs") {
  CHECK(make_complete(1).edge_count() == 0);
  CHECK(make_complete(3).edge_count() == 3);
  CHECK(make_complete(6).edge_count() == 15);
  CHECK(diameter(make_complete(5)) == 1);
  CHECK_THROWS_AS(make_complete(0), InvalidSizeError);
}

TEST_CASE("petersen and bowtie") {
  const Graph p = make_petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(is_regular(p, 3));
  CHECK(diameter(p) == 2);

  const Graph b = make_bowtie();
  CHECK(b.vertex_count() == 5);
  CHECK(b.edge_count() == 6);
  CHECK(b.degree(2) == 4);
}

TEST_CASE("cartesian product") {
  const Graph c4 = make_cycle(4);
  const Graph k1p = cartesian_product(make_complete(1), c4);
  CHECK(k1p.vertex_count() == 4);
  CHECK(k1p.edges() == c4.edges());

  const Graph prism = cartesian_product(c4, make_path(2));
  CHECK(prism.vertex_count() == 8);
  CHECK(prism.edge_count() == 12);
  CHECK(is_regular(prism, 3));

  const Graph k4c4 = cartesian_product(make_complete(4), c4);
  CHECK(k4c4.vertex_count() == 16);
  CHECK(is_regular(k4c4, 5));
}

TEST_CASE("clique chain") {
  const Graph g = make_gjn(3, 2);
  CHECK(g.vertex_count() == 21);
  CHECK(g.edge_count() == 102);
  for (VertexId v = 0; v < 3; ++v) CHECK(g.degree(v) == 4);

  // every vertex below the top level has exactly two neighbours one level up
  for (VertexId v = 0; v < 9; ++v) {
    const int level = std::get<CliqueLevelLabel>(g.label(v)).level;
    int up = 0;
    for (VertexId u : g.neighbors(v)) {
      if (std::get<CliqueLevelLabel>(g.label(u)).level == level + 1) ++up;
    }
    CHECK(up == 2);
  }

  const Graph tiny = make_gjn(1, 1);
  CHECK(tiny.vertex_count() == 3);
  CHECK(tiny.degree(0) == 2);

  CHECK_THROWS_AS(make_gjn(0, 2), InvalidSizeError);
  CHECK_THROWS_AS(make_gjn(3, 0), InvalidSizeError);
}

TEST_CASE("shuffled clique chain keeps the level structure") {
  const Graph plain = make_gjn(3, 3);
  const Graph shuffled = make_gjn(3, 3, 7);
  CHECK(shuffled.vertex_count() == plain.vertex_count());
  CHECK(shuffled.edge_count() == plain.edge_count());
  CHECK(degree_sequence(shuffled) == degree_sequence(plain));
  CHECK(make_gjn(3, 3, 7) == shuffled);
}

TEST_CASE("prisms") {
  const Graph p3 = make_prism(3);
  CHECK(p3.vertex_count() == 8);
  CHECK(is_regular(p3, 3));

  const Graph p5 = make_prism(5);
  CHECK(p5.vertex_count() == 16);
  CHECK(is_regular(p5, 5));
  for (int layer = 0; layer < 4; ++layer) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < p5.vertex_count(); ++v) {
      if (std::get<PrismLabel>(p5.label(v)).layer == layer) members.push_back(v);
    }
    CHECK(members.size() == 4);
    CHECK(induces_clique(p5, members));
  }
  CHECK_THROWS_AS(make_prism(2), InvalidSizeError);
}

TEST_CASE("prism layer rotation is an automorphism") {
  const Graph p = make_prism(5);
  auto rotate = [](VertexId v) { return (v + 4) % 16; };
  for (const auto& [u, v] : p.edges()) {
    CHECK(p.has_edge(rotate(u), rotate(v)));
  }
}

TEST_CASE("ring ladder with pendant cliques") {
  const Graph h = make_hnl(8, 3);
  CHECK(h.vertex_count() == 64);
  CHECK(h.edge_count() == 88);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto& l = std::get<HnlLabel>(h.label(v));
    switch (l.role) {
      case HnlRole::kCycle:
        CHECK(h.degree(v) == 4);
        break;
      case HnlRole::kPendant:
        CHECK(h.degree(v) == 3);
        break;
      case HnlRole::kCliqueExtra:
        CHECK(h.degree(v) == 2);
        break;
    }
  }
  CHECK(make_hnl(6, 4).vertex_count() == 60);

  const HnlLayout layout{8, 3};
  CHECK(h.has_edge(layout.ring(0, 1), layout.ring(0, 2)));
  CHECK(h.has_edge(layout.ring(7, 1), layout.ring(0, 1)));
  CHECK(h.has_edge(layout.ring(3, 2), layout.clique(3, 2, 0)));

  CHECK_THROWS_AS(make_hnl(7, 3), InvalidSizeError);
  CHECK_THROWS_AS(make_hnl(2, 3), InvalidSizeError);
  CHECK_THROWS_AS(make_hnl(8, 2), InvalidSizeError);
}

TEST_CASE("attaching a subgraph") {
  const Graph h = make_hnl(8, 3);
  const HnlLayout layout{8, 3};
  const Graph one = attach_graph(h, make_complete(1), 0, layout.clique(0, 1, 1));
  CHECK(one.vertex_count() == 65);
  CHECK(one.edge_count() == 89);

  const Graph four = attach_graph(h, make_complete(4), 0, layout.clique(2, 1, 1));
  CHECK(four.vertex_count() == 68);
  CHECK(induces_clique(four, {64, 65, 66, 67}));
  CHECK(four.has_edge(64, layout.clique(2, 1, 1)));

  CHECK_THROWS_AS(attach_graph(h, make_complete(4), 4, 0), InvalidVertexError);
  CHECK_THROWS_AS(attach_graph(h, make_complete(4), 0, 64), InvalidVertexError);
  // ring vertices have degree 4
  CHECK_THROWS_AS(attach_graph(h, make_complete(4), 0, layout.ring(0, 1)),
                  InvalidVertexError);
}

TEST_CASE("diameter agrees with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(rng, 2 + trial % 9);
    const auto d = oracle::distances(oracle::Matrix(g));
    int expected = 0;
    for (const auto& row : d) {
      for (int x : row) expected = std::max(expected, x);
    }
    CHECK(diameter(g) == static_cast<std::size_t>(expected));
    const auto bfs = bfs_distances(g, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      CHECK(bfs[v] == static_cast<std::size_t>(d[0][v]));
    }
  }
}

TEST_CASE("disconnected graphs have no diameter") {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(2, 3);
  const Graph g = std::move(b).build();
  CHECK_FALSE(is_connected(g));
  CHECK(bfs_distances(g, 0)[2] == kUnreachable);
  CHECK_THROWS_AS(diameter(g), InfiniteDiameterError);
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("0 1\n1 2");
  CHECK(g == make_path(3));

  const Graph h = parse_graph("# comment\nn 4\n\n0 1\n");
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 1);

  try {
    parse_edge_list("0 1\n3 3\n");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
}

TEST_CASE("JSON parsing") {
  const Graph g = parse_graph("{\"n\": 3, \"edges\": [[0, 1], [1, 2]]}");
  CHECK(g == make_path(3));
  CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 0]]}"), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 1], [1, 0]]}"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 1, 2]]}"),
                  ParseError);
  try {
    parse_graph("{\n\"n\": 3,\n\"edges\": [[0, 1]\n");
    FAIL("truncated JSON accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 3);
  }
}

TEST_CASE("serialization round-trips, labels included") {
  for (const Graph& g : {make_path(4), make_gjn(3, 2), make_prism(4),
                         make_hnl(4, 3), make_petersen()}) {
    const std::string text = serialize_graph(g);
    CHECK(text.back() == '\n');
    const Graph back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
    CHECK(parse_graph(serialize_edge_list(g)).edges() == g.edges());
  }
  CHECK(serialize_graph(make_path(3)) == "{\"n\":3,\"edges\":[[0,1],[1,2]]}\n");
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(make_path(2));
  CHECK(dot == "graph G {\n  node [shape=circle];\n  0;\n  1;\n  0 -- 1;\n}\n");
  const std::string colored =
      to_dot(make_path(2), Configuration::from_string("CD"));
  CHECK(colored.find("0 [fillcolor=black, fontcolor=white];") !=
        std::string::npos);
  CHECK(colored.find("1 [fillcolor=white];") != std::string::npos);
  CHECK_THROWS_AS(to_dot(make_path(2), Configuration::from_string("C")),
                  ConfigurationError);
}
