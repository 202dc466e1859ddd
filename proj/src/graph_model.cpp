#include "dessin/graph_model.hpp"

#include <algorithm>

#include "dessin/disjoint_set.hpp"
#include "dessin/errors.hpp"

namespace dessin {

std::string Vertex::to_string() const {
  return (color == Color::White ? "W" : "B") + id.to_string();
}

std::size_t BicoloredGraph::vertex_index(const Vertex& v) const {
  const auto& list = v.color == Color::White ? white_vertices : black_vertices;
  auto it = std::lower_bound(list.begin(), list.end(), v.id);
  if (it == list.end() || *it != v.id) throw DomainError("no such vertex " + v.to_string());
  std::size_t offset = v.color == Color::White ? 0 : white_vertices.size();
  return offset + static_cast<std::size_t>(it - list.begin());
}

Vertex BicoloredGraph::vertex_at(std::size_t index) const {
  if (index < white_vertices.size()) return {Color::White, white_vertices[index]};
  return {Color::Black, black_vertices.at(index - white_vertices.size())};
}

const Edge& BicoloredGraph::edge(const ElementLabel& label) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), label,
                             [](const Edge& e, const ElementLabel& x) { return e.label < x; });
  if (it == edges.end() || it->label != label) throw DomainError("no such edge " + label.to_string());
  return *it;
}

BicoloredGraph build_model(const PermutationPair& pair) {
  BicoloredGraph g;
  const GroundSet& e = pair.ground();
  for (const auto& c : pair.white().cycles()) g.white_vertices.push_back(c.front());
  for (const auto& c : pair.black().cycles()) g.black_vertices.push_back(c.front());
  g.edges.reserve(e.size());
  for (std::uint32_t i = 0; i < e.size(); ++i) {
    g.edges.push_back({e[i], e[pair.white().orbit_min(i)], e[pair.black().orbit_min(i)]});
  }
  return g;
}

Components components(const BicoloredGraph& graph) {
  DisjointSet ds(graph.num_vertices());
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  ends.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    std::size_t w = graph.vertex_index({Color::White, e.white});
    std::size_t b = graph.vertex_index({Color::Black, e.black});
    ds.unite(w, b);
    ends.emplace_back(w, b);
  }
  Components out;
  std::vector<std::size_t> label(graph.num_vertices(), ~std::size_t{0});
  out.vertex_component.resize(graph.num_vertices());
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    std::size_t root = ds.find(v);
    if (label[root] == ~std::size_t{0}) label[root] = out.count++;
    out.vertex_component[v] = label[root];
  }
  for (const auto& [w, b] : ends) out.edge_component.push_back(out.vertex_component[w]);
  return out;
}

std::size_t num_components(const BicoloredGraph& graph) { return components(graph).count; }

bool is_transitive_via_graph(const PermutationPair& pair) { return num_components(build_model(pair)) == 1; }

std::string Walk::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ", " + edges[i - 1].to_string() + ", ";
    out += vertices[i].color == Color::White ? "W" : "B";
  }
  return out;
}

Walk walk_from_sequence(const PermutationPair& pair, const std::vector<ElementLabel>& seq, Trim trim) {
  if (seq.empty()) throw DomainError("a product sequence needs at least one element");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (pair.product()(seq[i]) != seq[i + 1]) {
      throw DomainError("not a product sequence at " + seq[i].to_string() + " -> " + seq[i + 1].to_string());
    }
  }
  std::vector<ElementLabel> route;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    route.push_back(seq[i]);
    route.push_back(pair.black()(seq[i]));
  }
  route.push_back(seq.back());

  const bool drop_first = trim == Trim::First || trim == Trim::Both;
  const bool drop_last = trim == Trim::Last || trim == Trim::Both;
  const BicoloredGraph g = build_model(pair);
  const Edge& first = g.edge(seq.front());

  Walk walk;
  walk.vertices.push_back(drop_first ? Vertex{Color::Black, first.black} : Vertex{Color::White, first.white});
  std::size_t begin = drop_first ? 1 : 0;
  std::size_t end = route.size() - (drop_last && route.size() > begin ? 1 : 0);
  for (std::size_t i = begin; i < end; ++i) {
    const Edge& e = g.edge(route[i]);
    const Vertex& here = walk.vertices.back();
    Vertex next = here.color == Color::White ? Vertex{Color::Black, e.black} : Vertex{Color::White, e.white};
    walk.edges.push_back(route[i]);
    walk.vertices.push_back(next);
  }
  return walk;
}

bool is_valid_walk(const BicoloredGraph& graph, const Walk& walk) {
  if (walk.vertices.size() != walk.edges.size() + 1) return false;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const Edge& e = graph.edge(walk.edges[i]);
    Vertex w{Color::White, e.white};
    Vertex b{Color::Black, e.black};
    const Vertex& u = walk.vertices[i];
    const Vertex& v = walk.vertices[i + 1];
    if (!((u == w && v == b) || (u == b && v == w))) return false;
  }
  return true;
}

WalkTests walks_avoiding_at(const PermutationPair& pair, const BicoloredGraph& graph, std::uint32_t a,
                            std::uint32_t b) {
  if (a == b) throw DomainError("a and b must be distinct");
  DisjointSet ds(graph.num_vertices());
  auto white_of = [&](std::uint32_t i) {
    return graph.vertex_index({Color::White, graph.edges[pair.white().orbit_min(i)].label});
  };
  auto black_of = [&](std::uint32_t i) {
    return graph.vertex_index({Color::Black, graph.edges[pair.black().orbit_min(i)].label});
  };
  for (std::uint32_t i = 0; i < graph.edges.size(); ++i) {
    if (i == a || i == b) continue;
    ds.unite(white_of(i), black_of(i));
  }
  WalkTests t;
  t.white_a_black_a = ds.connected(white_of(a), black_of(a));
  t.white_b_black_b = ds.connected(white_of(b), black_of(b));
  t.white_a_white_b = ds.connected(white_of(a), white_of(b));
  t.black_a_black_b = ds.connected(black_of(a), black_of(b));
  return t;
}

WalkTests walks_avoiding(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  return walks_avoiding_at(pair, build_model(pair), pair.index_of(a), pair.index_of(b));
}

bool wild_walk_criterion(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  if (a == b) throw DomainError("a and b must be distinct");
  if (!is_transitive(pair)) throw DomainError("the walk criteria apply to transitive pairs");
  return walks_avoiding(pair, a, b).any_four();
}

bool tame_walk_criterion(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  if (!is_tame(classify_exceptional(pair, a, b))) {
    throw DomainError("(" + a.to_string() + ", " + b.to_string() + ") is not Tame Exceptional");
  }
  if (!is_transitive(pair)) throw DomainError("the walk criteria apply to transitive pairs");
  return walks_avoiding(pair, a, b).any_two();
}

ModelPartition model_partition(const BicoloredGraph& graph) {
  auto classes = [&](const std::vector<ElementLabel>& ids, Color color) {
    std::vector<std::vector<ElementLabel>> out(ids.size());
    for (const auto& e : graph.edges) {
      const ElementLabel& id = color == Color::White ? e.white : e.black;
      std::size_t k = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
      out[k].push_back(e.label);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return {classes(graph.white_vertices, Color::White), classes(graph.black_vertices, Color::Black)};
}

std::string export_dot(const BicoloredGraph& graph) {
  auto name = [](Color c, const ElementLabel& id) {
    return std::string("\"") + (c == Color::White ? "w" : "b") + id.to_string() + "\"";
  };
  std::string out = "graph dessin {\n";
  out += "  node [shape=circle, label=\"\", width=0.25];\n";
  for (const auto& v : graph.white_vertices) {
    out += "  " + name(Color::White, v) + " [style=solid, fillcolor=white];\n";
  }
  for (const auto& v : graph.black_vertices) {
    out += "  " + name(Color::Black, v) + " [style=filled, fillcolor=black];\n";
  }
  for (const auto& e : graph.edges) {
    out += "  " + name(Color::White, e.white) + " -- " + name(Color::Black, e.black) + " [label=\"" +
           e.label.to_string() + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace dessin
