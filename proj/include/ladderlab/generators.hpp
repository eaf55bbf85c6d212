#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ladderlab/decomposition.hpp"
#include "ladderlab/graph.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab {

struct WitnessBundle {
  std::string family;  // bounded-degree | planar-even | pathwidth | treewidth
  std::map<std::string, std::int64_t> params;
  Graph graph;
  LadderCertificate certificate;
  std::optional<PathDecomposition> path_decomposition;
  std::optional<PairingDecomposition> pairing;
  std::uint64_t expected_order = 0;
  std::uint32_t expected_distance = 0;
  std::optional<std::size_t> expected_width;
};

// H_{k,h}: two trees over words of length <= h in {1..k}; a_{s.d} joined to b_{s.c} (c < d)
// by a path of length 2|s|+1. Certificate: distance-(2h-1) half graph on the leaves.
WitnessBundle gen_bounded_degree(int k, int h);

struct LevelMap {
  std::vector<std::int64_t> level;  // every vertex; connector interiors interpolate
  std::vector<char> on_tree;        // vertex belongs to one of the two word trees
};

LevelMap level_map(const WitnessBundle& bundle);

// Edges of the two word trees, as (parent, child) vertex pairs.
std::vector<Edge> word_tree_edges(const WitnessBundle& bundle);

// H_{2,h} with a pendant vertex on every A-leaf: distance-2h half graph of order 2^h.
WitnessBundle gen_planar_even(int h);

// P_{p,d,k}: distance-(4d-1) half graph of order (2d+1)^p with a path decomposition of width <= p+2.
WitnessBundle gen_pathwidth(int p, int d, int k);

struct PairedGraph {
  Graph graph;
  PairingDecomposition dec;
};

enum class SeedMode { Base, Lengthen, Widen };

// Base: the order-2, width-3, distance-1 example. Lengthen(d): distance d, width 3.
// Widen(k): distance 1, width 2k+1.
PairedGraph gen_pairing_seed(SeedMode mode, int param = 0);

PairedGraph make_neighboring(const PairedGraph& x);

// CombineNeighboring(g, MakeNeighboring(h)). g at distance d-1, h at distance d.
PairedGraph combine(const PairedGraph& g, const PairedGraph& h);

// 2^{binom(d+k-2, k-1)}, or nullopt when it does not fit in 63 bits.
std::optional<std::uint64_t> treewidth_order(int d, int k);

// G_{d,k} with its pairing decomposition. Rejects orders above `order_cap`.
WitnessBundle gen_treewidth(int d, int k, std::uint64_t order_cap = 4096);
PairedGraph build_treewidth_pairing(int d, int k, std::uint64_t order_cap = 4096);

LadderCertificate pairing_certificate(const PairingDecomposition& p);

// Generic small families used by tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // centre is vertex 0
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph edgeless_graph(std::size_t n);

}  // namespace ladderlab
