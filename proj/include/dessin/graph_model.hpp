#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "dessin/pair.hpp"

namespace dessin {

// A vertex is a white or black orbit, named by its minimum element.
struct Vertex {
  Color color = Color::White;
  ElementLabel id;

  std::string to_string() const;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  ElementLabel label;
  ElementLabel white;  // id of the white vertex
  ElementLabel black;  // id of the black vertex

  friend bool operator==(const Edge&, const Edge&) = default;
};

class BicoloredGraph {
 public:
  std::vector<ElementLabel> white_vertices;  // sorted
  std::vector<ElementLabel> black_vertices;  // sorted
  std::vector<Edge> edges;                   // sorted by label

  std::size_t num_vertices() const { return white_vertices.size() + black_vertices.size(); }
  // Dense index: white vertices first, then black.
  std::size_t vertex_index(const Vertex& v) const;
  Vertex vertex_at(std::size_t index) const;
  const Edge& edge(const ElementLabel& label) const;

  friend bool operator==(const BicoloredGraph&, const BicoloredGraph&) = default;
};

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> vertex_component;  // by dense vertex index
  std::vector<std::size_t> edge_component;    // parallel to graph.edges
};

BicoloredGraph build_model(const PermutationPair& pair);
Components components(const BicoloredGraph& graph);
std::size_t num_components(const BicoloredGraph& graph);
bool is_transitive_via_graph(const PermutationPair& pair);

struct Walk {
  std::vector<Vertex> vertices;
  std::vector<ElementLabel> edges;  // edges[i] joins vertices[i] and vertices[i + 1]

  // "W, 1, B, 2, W": vertex colours and edge labels.
  std::string to_string() const;
};

enum class Trim { None, First, Last, Both };

// Walk along x0, black(x0), x1, ..., black(x_{n-1}), x_n for a product
// sequence x0..xn. Untrimmed it runs from the white vertex of x0 to the black
// vertex of xn; dropping the first (last) edge starts (ends) at the other
// endpoint. Throws DomainError if seq is not a product sequence.
Walk walk_from_sequence(const PermutationPair& pair, const std::vector<ElementLabel>& seq, Trim trim);
bool is_valid_walk(const BicoloredGraph& graph, const Walk& walk);

// Existence of the walks in D \ (a u b), in the order listed.
struct WalkTests {
  bool white_a_black_a = false;
  bool white_b_black_b = false;
  bool white_a_white_b = false;
  bool black_a_black_b = false;

  bool any_two() const { return white_a_black_a || white_b_black_b; }
  bool any_four() const { return any_two() || white_a_white_b || black_a_black_b; }
};

WalkTests walks_avoiding(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);
WalkTests walks_avoiding_at(const PermutationPair& pair, const BicoloredGraph& graph, std::uint32_t a,
                            std::uint32_t b);

// For a transitive pair: true iff one of the four walks exists; this decides
// whether (white^t, black) is transitive, t = (a b).
bool wild_walk_criterion(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);
// For a Tame Exceptional (a, b): the first two walks suffice. Throws
// DomainError when (a, b) is not Tame Exceptional.
bool tame_walk_criterion(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);

// White and black vertex classes as sorted edge-label sets, each list sorted.
struct ModelPartition {
  std::vector<std::vector<ElementLabel>> white;
  std::vector<std::vector<ElementLabel>> black;

  friend bool operator==(const ModelPartition&, const ModelPartition&) = default;
};

ModelPartition model_partition(const BicoloredGraph& graph);

// Graphviz text. White vertices are unfilled circles, black vertices filled;
// nodes and edges are emitted in sorted order.
std::string export_dot(const BicoloredGraph& graph);

}  // namespace dessin
