#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ladderlab/graph.hpp"

namespace ladderlab {

using Bag = std::vector<Vertex>;  // kept sorted

struct PathDecomposition {
  std::vector<Bag> bags;
  std::size_t width() const;
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

struct TreeDecomposition {
  std::vector<Bag> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::optional<std::size_t> root;
  std::size_t width() const;
};

struct PairingDecomposition {
  TreeDecomposition base;  // root must be set
  std::uint32_t d = 1;
  std::pair<Vertex, Vertex> root_pair;
  std::vector<std::pair<Vertex, Vertex>> leaf_pairs;
  std::vector<std::size_t> leaf_nodes;  // bag-node of each leaf pair
  bool neighboring = false;

  std::size_t order() const { return leaf_pairs.size(); }
  std::size_t width() const { return base.width(); }
};

struct DecompositionReport {
  bool valid = true;
  std::size_t width = 0;
  bool covers_all_vertices = true;
  std::string violation;
  std::optional<Vertex> vertex;
  // (i, j) ladder indices, 1-based, for pairing distance violations.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

void sort_bag(Bag& bag);

DecompositionReport validate_path_decomposition(const Graph& g, const PathDecomposition& pd);
DecompositionReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Canonical nice form: empty first and last bag, and between consecutive input bags
// first forget, then introduce, each in ascending vertex id.
PathDecomposition to_nice(const Graph& g, const PathDecomposition& pd);
bool is_nice(const PathDecomposition& pd);
// Index of the bag that introduces v in a nice decomposition.
std::optional<std::size_t> introduce_index(const PathDecomposition& nice, Vertex v);

DecompositionReport validate_pairing(const Graph& g, const PairingDecomposition& p,
                                     unsigned threads = 1);

TreeDecomposition path_as_tree(const PathDecomposition& pd);

}  // namespace ladderlab

namespace ladderlab {

// Bags L_i ∪ L_{i+1} over BFS layers, component by component (smallest id first).
// Valid for every graph; used when no better decomposition is known.
PathDecomposition layer_path_decomposition(const Graph& g);

}  // namespace ladderlab
