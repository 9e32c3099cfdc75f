#include "powerindex/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "powerindex/error.hpp"

namespace powerindex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string_view role_name(HnlRole role) {
  switch (role) {
    case HnlRole::kCycle:
      return "v";
    case HnlRole::kPendant:
      return "z";
    case HnlRole::kCliqueExtra:
      return "extra";
  }
  return "?";
}

HnlRole parse_role(const std::string& name) {
  if (name == "v") return HnlRole::kCycle;
  if (name == "z") return HnlRole::kPendant;
  if (name == "extra") return HnlRole::kCliqueExtra;
  throw ParseError(0, "unknown H role '" + name + "'");
}

std::optional<ordered_json> label_to_json(const VertexLabel& label) {
  return std::visit(
      [](const auto& l) -> std::optional<ordered_json> {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, CliqueLevelLabel>) {
          return ordered_json{{"kind", "clique_level"}, {"level", l.level}};
        } else if constexpr (std::is_same_v<T, HnlLabel>) {
          return ordered_json{{"kind", "hnl"},
                              {"column", l.column},
                              {"row", l.row},
                              {"role", role_name(l.role)},
                              {"slot", l.slot}};
        } else if constexpr (std::is_same_v<T, PrismLabel>) {
          return ordered_json{
              {"kind", "prism"}, {"layer", l.layer}, {"index", l.index}};
        } else {
          return ordered_json{
              {"kind", "product"}, {"left", l.left}, {"right", l.right}};
        }
      },
      label);
}

VertexLabel label_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "clique_level") {
    return CliqueLevelLabel{j.at("level").get<int>()};
  }
  if (kind == "hnl") {
    return HnlLabel{j.at("column").get<int>(), j.at("row").get<int>(),
                    parse_role(j.at("role").get<std::string>()),
                    j.at("slot").get<int>()};
  }
  if (kind == "prism") {
    return PrismLabel{j.at("layer").get<int>(), j.at("index").get<int>()};
  }
  if (kind == "product") {
    return ProductLabel{j.at("left").get<VertexId>(),
                        j.at("right").get<VertexId>()};
  }
  throw ParseError(0, "unknown label kind '" + kind + "'");
}

void add_parsed_edge(GraphBuilder& b, std::int64_t u, std::int64_t v,
                     std::size_t line, const std::string& where) {
  const auto n = static_cast<std::int64_t>(b.vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw ParseError(line, where + "vertex id out of range 0.." +
                               std::to_string(n - 1));
  }
  if (u == v) {
    throw ParseError(line, where + "self-loop at vertex " + std::to_string(u));
  }
  if (!b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
    throw ParseError(line, where + "duplicate edge " + std::to_string(u) +
                               " " + std::to_string(v));
  }
}

std::optional<std::int64_t> parse_token(std::string_view token) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError(1, "graph JSON must be an object");
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0) throw ParseError(0, "\"n\" must be nonnegative");
    GraphBuilder b(static_cast<std::size_t>(n));
    std::size_t index = 0;
    for (const auto& edge : doc.at("edges")) {
      if (!edge.is_array() || edge.size() != 2) {
        throw ParseError(0, "edge #" + std::to_string(index) +
                                " must be a pair [u, v]");
      }
      add_parsed_edge(b, edge[0].get<std::int64_t>(),
                      edge[1].get<std::int64_t>(), 0,
                      "edge #" + std::to_string(index) + ": ");
      ++index;
    }
    if (doc.contains("labels")) {
      for (const auto& [key, value] : doc.at("labels").items()) {
        const auto id = parse_token(key);
        if (!id || *id < 0 || *id >= n) {
          throw ParseError(0, "label key '" + key + "' is not a vertex id");
        }
        b.set_label(static_cast<VertexId>(*id), label_from_json(value));
      }
    }
    return std::move(b).build();
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  struct Pending {
    std::int64_t u, v;
    std::size_t line;
  };
  std::optional<std::int64_t> declared;
  std::vector<Pending> pending;
  std::int64_t max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two fields, found " +
                                    std::to_string(tokens.size()));
    }
    if (tokens[0] == "n") {
      if (declared || !pending.empty()) {
        throw ParseError(line_no, "header must come first and only once");
      }
      declared = parse_token(tokens[1]);
      if (!declared || *declared < 0) {
        throw ParseError(line_no, "bad vertex count");
      }
      continue;
    }
    const auto u = parse_token(tokens[0]);
    const auto v = parse_token(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "expected integer vertex ids");
    pending.push_back({*u, *v, line_no});
    max_id = std::max({max_id, *u, *v});
  }

  GraphBuilder b(static_cast<std::size_t>(declared.value_or(max_id + 1)));
  for (const auto& e : pending) add_parsed_edge(b, e.u, e.v, e.line, "");
  return std::move(b).build();
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_graph_json(text);
  }
  return parse_edge_list(text);
}

std::string serialize_graph(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (g.has_labels()) {
    ordered_json labels = ordered_json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (auto l = label_to_json(g.label(v))) {
        labels[std::to_string(v)] = std::move(*l);
      }
    }
    doc["labels"] = std::move(labels);
  }
  return doc.dump() + "\n";
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

namespace {

std::string dot_impl(const Graph& g, const Configuration* c) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle";
  if (c != nullptr) out << ", style=filled";
  out << "];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (c != nullptr) {
      out << (c->is_collaborator(v) ? " [fillcolor=black, fontcolor=white]"
                                    : " [fillcolor=white]");
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const Graph& g) { return dot_impl(g, nullptr); }

std::string to_dot(const Graph& g, const Configuration& c) {
  c.require_fits(g);
  return dot_impl(g, &c);
}

}  // namespace powerindex
