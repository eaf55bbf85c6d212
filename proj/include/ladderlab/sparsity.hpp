#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ladderlab/graph.hpp"

namespace ladderlab {

struct VertexOrdering {
  std::vector<Vertex> order;     // order[i] = vertex at position i
  std::vector<std::size_t> pos;  // pos[v] = position of v

  static VertexOrdering from_order(std::vector<Vertex> order);
  static VertexOrdering identity(std::size_t n);
  bool before(Vertex u, Vertex v) const { return pos[u] < pos[v]; }
};

// Vertices v <=_sigma u joined to u by a path of length <= d on which v is the sigma-minimum.
std::vector<Vertex> wreach(const Graph& g, const VertexOrdering& sigma, Vertex u, std::uint32_t d);
// The same for every u at once (one restricted BFS per v).
std::vector<std::vector<Vertex>> wreach_all(const Graph& g, const VertexOrdering& sigma, std::uint32_t d,
                                            unsigned threads = 1);

std::size_t wcol_of_order(const Graph& g, const VertexOrdering& sigma, std::uint32_t d, unsigned threads = 1);

struct WcolExact {
  std::size_t value = 0;
  VertexOrdering sigma;  // lexicographically first optimal ordering
};
// Brute force over all orderings; guarded at 8 vertices (LADDERLAB_SIZE_CAP overrides).
WcolExact wcol_exact(const Graph& g, std::uint32_t d);

// Smallest-degree-first removal (smallest id on ties); the vertex removed last comes first.
VertexOrdering degeneracy_order(const Graph& g);
std::size_t degeneracy(const Graph& g);

struct UqwWitness {
  std::vector<Vertex> deleted;
  std::vector<Vertex> independent;
  std::uint32_t d = 1;
};

struct SparsityReport {
  bool valid = true;
  std::string violation;
};

// Independent set pairwise at distance > d in g - deleted, disjoint from deleted,
// and (when A is given) contained in A.
SparsityReport validate_uqw(const Graph& g, const UqwWitness& w, const std::vector<Vertex>* A = nullptr);

// W! (m+1)^{W+1} for W = wcol_d(g, sigma), saturating at UINT64_MAX.
std::uint64_t uqw_guarantee(std::size_t wcol, std::size_t m);

std::optional<UqwWitness> uqw_extract(const Graph& g, const std::vector<Vertex>& A, std::uint32_t d,
                                      std::size_t m, const VertexOrdering& sigma);

struct MinorModel {
  Graph host;
  Graph pattern;
  std::vector<std::vector<Vertex>> branch_sets;
};

SparsityReport validate_minor_model(const MinorModel& model);

Graph complete_bipartite(std::size_t left, std::size_t right);

struct KtReduceResult {
  std::variant<UqwWitness, MinorModel> branch;
  std::vector<Vertex> core;  // C
  bool small_core() const { return std::holds_alternative<UqwWitness>(branch); }
};

// Minimal L_v for one v: greedy single-element removal from S in ascending id order.
std::vector<Vertex> minimal_separator(const Graph& g, const std::vector<Vertex>& S, Vertex v, std::uint32_t d);

KtReduceResult kt_reduce(const Graph& g, const std::vector<Vertex>& S, const std::vector<Vertex>& B,
                         std::uint32_t d, std::uint32_t t);

}  // namespace ladderlab
