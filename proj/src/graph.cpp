#include "ladderlab/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <thread>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

const std::string kEmpty;

unsigned worker_count(unsigned threads, std::size_t jobs) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

template <class Fn>
void parallel_for(std::size_t jobs, unsigned threads, Fn fn) {
  unsigned workers = worker_count(threads, jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<std::int32_t> bfs(const Graph& g, Vertex source, const std::vector<char>* blocked,
                              std::uint32_t limit) {
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  if (blocked && !blocked->empty() && (*blocked)[source]) return dist;
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (static_cast<std::uint32_t>(dist[u]) >= limit) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      if (blocked && !blocked->empty() && (*blocked)[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n)
    throw ArgumentError("label count does not match vertex count");
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ArgumentError("edge endpoint out of range");
    if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : sorted) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * sorted.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : sorted) g.targets_[fill[v]++] = u;
  for (auto [u, v] : sorted) g.targets_[fill[u]++] = v;
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);

  bool any_label = std::any_of(labels.begin(), labels.end(), [](auto& s) { return !s.empty(); });
  if (any_label) g.labels_ = std::move(labels);
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const {
  return labels_.empty() ? kEmpty : labels_[v];
}

std::optional<Vertex> Graph::find_label(const std::string& text) const {
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == text) return v;
  return std::nullopt;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count())
    throw ArgumentError("vertex " + std::to_string(v) + " out of range (n=" +
                        std::to_string(vertex_count()) + ")");
}

Vertex GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= labels_.size() || v >= labels_.size()) throw ArgumentError("edge endpoint out of range");
  edges_.emplace_back(u, v);
}

void GraphBuilder::add_path(Vertex u, Vertex v, std::size_t length, const std::string& label_prefix) {
  if (length == 0) throw ArgumentError("path length must be positive");
  Vertex prev = u;
  for (std::size_t i = 1; i < length; ++i) {
    Vertex w = add_vertex(label_prefix.empty() ? std::string{}
                                               : label_prefix + "." + std::to_string(i));
    add_edge(prev, w);
    prev = w;
  }
  add_edge(prev, v);
}

void GraphBuilder::set_label(Vertex v, std::string label) {
  if (v >= labels_.size()) throw ArgumentError("vertex out of range");
  labels_[v] = std::move(label);
}

Graph GraphBuilder::build() const { return Graph::from_edges(labels_.size(), edges_, labels_); }

DistanceVector distances_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  return {source, bfs(g, source, nullptr, UINT32_MAX)};
}

DistanceVector distances_avoiding(const Graph& g, Vertex source, const std::vector<char>& blocked) {
  g.check_vertex(source);
  if (!blocked.empty() && blocked.size() != g.vertex_count())
    throw ArgumentError("blocked mask has wrong size");
  return {source, bfs(g, source, &blocked, UINT32_MAX)};
}

DistanceVector distances_bounded(const Graph& g, Vertex source, std::uint32_t limit) {
  g.check_vertex(source);
  return {source, bfs(g, source, nullptr, limit)};
}

std::vector<std::int64_t> bfs_parents(const Graph& g, Vertex source, const std::vector<char>& blocked) {
  auto dist = distances_avoiding(g, source, blocked);
  std::vector<std::int64_t> parent(g.vertex_count(), -1);
  if (!dist.reachable(source)) return parent;
  parent[source] = source;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == source || !dist.reachable(v)) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist.reachable(w) && dist.raw()[w] + 1 == dist.raw()[v]) {
        parent[v] = w;
        break;
      }
    }
  }
  return parent;
}

std::vector<Vertex> tree_path(const std::vector<std::int64_t>& parents, Vertex target) {
  std::vector<Vertex> path;
  if (target >= parents.size() || parents[target] < 0) return path;
  Vertex v = target;
  path.push_back(v);
  while (parents[v] != static_cast<std::int64_t>(v)) {
    v = static_cast<Vertex>(parents[v]);
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<DistanceVector> distances_from_many(const Graph& g, const std::vector<Vertex>& sources,
                                                unsigned threads) {
  for (Vertex s : sources) g.check_vertex(s);
  std::vector<DistanceVector> out(sources.size());
  parallel_for(sources.size(), threads, [&](std::size_t i) {
    out[i] = DistanceVector(sources[i], bfs(g, sources[i], nullptr, UINT32_MAX));
  });
  return out;
}

Graph power_graph(const Graph& g, std::uint32_t d, unsigned threads) {
  if (d == 0) throw ArgumentError("power_graph requires d >= 1");
  std::size_t n = g.vertex_count();
  std::vector<std::vector<Edge>> per_source(n);
  parallel_for(n, threads, [&](std::size_t u) {
    auto dist = bfs(g, static_cast<Vertex>(u), nullptr, d);
    for (Vertex v = static_cast<Vertex>(u) + 1; v < n; ++v)
      if (dist[v] > 0) per_source[u].emplace_back(static_cast<Vertex>(u), v);
  });
  std::vector<Edge> edges;
  for (auto& e : per_source) edges.insert(edges.end(), e.begin(), e.end());
  return Graph::from_edges(n, edges, g.labels());
}

std::vector<char> ball(const Graph& g, Vertex v, std::uint32_t d) {
  auto dist = distances_bounded(g, v, d);
  std::vector<char> mask(g.vertex_count(), 0);
  for (Vertex w = 0; w < g.vertex_count(); ++w) mask[w] = dist.reachable(w);
  return mask;
}

Graph remove_vertices(const Graph& g, const std::vector<Vertex>& removed, std::vector<Vertex>* kept) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : removed) {
    g.check_vertex(v);
    gone[v] = 1;
  }
  std::vector<std::int64_t> remap(g.vertex_count(), -1);
  std::vector<Vertex> keep;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gone[v]) continue;
    remap[v] = static_cast<std::int64_t>(keep.size());
    keep.push_back(v);
    if (g.has_labels()) labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v])
      edges.emplace_back(static_cast<Vertex>(remap[u]), static_cast<Vertex>(remap[v]));
  if (kept) *kept = keep;
  return Graph::from_edges(keep.size(), edges, std::move(labels));
}

std::vector<Vertex> normalize_set(const Graph& g, std::vector<Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

DistanceProfile profile(const Graph& g, Vertex v, std::vector<Vertex> S, std::uint32_t d) {
  if (d == 0) throw ArgumentError("profile requires d >= 1");
  if (S.empty()) throw ArgumentError("profile requires a non-empty set");
  S = normalize_set(g, std::move(S));
  auto dist = distances_bounded(g, v, d);
  DistanceProfile p;
  p.source = v;
  p.d = d;
  p.domain = S;
  for (Vertex s : S) p.values.push_back(dist.reachable(s) ? *dist.get(s) : d + 1);
  return p;
}

std::size_t profile_count(const Graph& g, std::vector<Vertex> A, std::uint32_t d, unsigned threads) {
  if (d == 0) throw ArgumentError("profile_count requires d >= 1");
  if (A.empty()) throw ArgumentError("profile_count requires a non-empty set");
  A = normalize_set(g, std::move(A));
  std::vector<std::vector<std::int32_t>> from_a(A.size());
  parallel_for(A.size(), threads, [&](std::size_t i) { from_a[i] = bfs(g, A[i], nullptr, d); });
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> tuple(A.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < A.size(); ++i)
      tuple[i] = from_a[i][v] >= 0 ? static_cast<std::uint32_t>(from_a[i][v]) : d + 1;
    seen.insert(tuple);
  }
  return seen.size();
}

}  // namespace ladderlab
