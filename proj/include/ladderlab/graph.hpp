#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ladderlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph in CSR form. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Self-loops are rejected, repeated edges are merged.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  // Linear scan; labels are for diagnostics, not for lookups in hot loops.
  std::optional<Vertex> find_label(const std::string& text) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.offsets_ == y.offsets_ && x.targets_ == y.targets_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

// Incremental construction with optional labels.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t n) : labels_(n) {}

  Vertex add_vertex(std::string label = {});
  void add_edge(Vertex u, Vertex v);
  // Path of `length` edges from u to v through fresh interior vertices.
  void add_path(Vertex u, Vertex v, std::size_t length, const std::string& label_prefix = {});
  void set_label(Vertex v, std::string label);
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::size_t vertex_count() const { return labels_.size(); }
  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// BFS distances from one source. Unreachable vertices are never given a numeric value.
class DistanceVector {
 public:
  DistanceVector() = default;
  DistanceVector(Vertex source, std::vector<std::int32_t> raw)
      : source_(source), raw_(std::move(raw)) {}

  Vertex source() const { return source_; }
  std::size_t size() const { return raw_.size(); }
  bool reachable(Vertex v) const { return raw_[v] >= 0; }
  std::optional<std::uint32_t> get(Vertex v) const {
    if (raw_[v] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(raw_[v]);
  }
  bool within(Vertex v, std::uint32_t d) const {
    return raw_[v] >= 0 && static_cast<std::uint32_t>(raw_[v]) <= d;
  }
  // Strictly farther than d, counting unreachable as farther.
  bool beyond(Vertex v, std::uint32_t d) const { return !within(v, d); }
  const std::vector<std::int32_t>& raw() const { return raw_; }

 private:
  Vertex source_ = 0;
  std::vector<std::int32_t> raw_;
};

DistanceVector distances_from(const Graph& g, Vertex source);

// BFS in g minus the vertices flagged in `blocked`. A blocked source yields all-unreachable.
DistanceVector distances_avoiding(const Graph& g, Vertex source,
                                  const std::vector<char>& blocked);

// BFS restricted to at most `limit` hops; vertices beyond are reported unreachable.
DistanceVector distances_bounded(const Graph& g, Vertex source, std::uint32_t limit);

// Shortest-path tree from `source` where each vertex's parent is its smallest-id
// neighbour one layer closer. parent[source] = source; unreachable = -1.
std::vector<std::int64_t> bfs_parents(const Graph& g, Vertex source,
                                      const std::vector<char>& blocked = {});

// Vertex sequence source..target along bfs_parents. Empty when unreachable.
std::vector<Vertex> tree_path(const std::vector<std::int64_t>& parents, Vertex target);

// Distances from each listed source; work spread over `threads` workers (0 = hardware).
std::vector<DistanceVector> distances_from_many(const Graph& g, const std::vector<Vertex>& sources,
                                                unsigned threads = 1);

Graph power_graph(const Graph& g, std::uint32_t d, unsigned threads = 1);

// Vertices of g reachable from `v` within distance d, as an id mask.
std::vector<char> ball(const Graph& g, Vertex v, std::uint32_t d);

// The graph with the given vertices removed; ids are remapped densely, `kept` maps new -> old.
Graph remove_vertices(const Graph& g, const std::vector<Vertex>& removed,
                      std::vector<Vertex>* kept = nullptr);

struct DistanceProfile {
  Vertex source = 0;
  std::vector<Vertex> domain;
  // Value d+1 encodes "beyond d".
  std::vector<std::uint32_t> values;
  std::uint32_t d = 1;

  bool is_infinite(std::size_t i) const { return values[i] > d; }
};

DistanceProfile profile(const Graph& g, Vertex v, std::vector<Vertex> S, std::uint32_t d);

// Number of distinct distance-d profiles on A over all vertices of g.
std::size_t profile_count(const Graph& g, std::vector<Vertex> A, std::uint32_t d,
                          unsigned threads = 1);

// Sorts, deduplicates and range-checks a vertex set.
std::vector<Vertex> normalize_set(const Graph& g, std::vector<Vertex> s);

}  // namespace ladderlab
