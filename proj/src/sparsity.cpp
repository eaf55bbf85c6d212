#include "ladderlab/sparsity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "ladderlab/errors.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/sunflower.hpp"

namespace ladderlab {

VertexOrdering VertexOrdering::from_order(std::vector<Vertex> order) {
  VertexOrdering s;
  s.pos.assign(order.size(), SIZE_MAX);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size() || s.pos[order[i]] != SIZE_MAX)
      throw ArgumentError("ordering is not a permutation of the vertices");
    s.pos[order[i]] = i;
  }
  s.order = std::move(order);
  return s;
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
  std::vector<Vertex> o(n);
  std::iota(o.begin(), o.end(), 0);
  return from_order(std::move(o));
}

namespace {

void check_ordering(const Graph& g, const VertexOrdering& s) {
  if (s.order.size() != g.vertex_count() || s.pos.size() != g.vertex_count())
    throw ArgumentError("ordering size does not match the graph");
}

// Vertices u reachable from v within d steps using only vertices at or after v in sigma.
void reach_up(const Graph& g, const VertexOrdering& s, Vertex v, std::uint32_t d,
              std::vector<std::int32_t>& dist, std::vector<Vertex>& out) {
  out.clear();
  out.push_back(v);
  dist[v] = 0;
  for (std::size_t h = 0; h < out.size(); ++h) {
    Vertex x = out[h];
    if (static_cast<std::uint32_t>(dist[x]) >= d) continue;
    for (Vertex w : g.neighbors(x)) {
      if (dist[w] >= 0 || s.pos[w] < s.pos[v]) continue;
      dist[w] = dist[x] + 1;
      out.push_back(w);
    }
  }
  for (Vertex x : out) dist[x] = -1;
}

}  // namespace

std::vector<Vertex> wreach(const Graph& g, const VertexOrdering& sigma, Vertex u, std::uint32_t d) {
  check_ordering(g, sigma);
  g.check_vertex(u);
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  std::vector<Vertex> reached, out;
  for (std::size_t i = 0; i <= sigma.pos[u]; ++i) {
    Vertex v = sigma.order[i];
    reach_up(g, sigma, v, d, dist, reached);
    if (std::find(reached.begin(), reached.end(), u) != reached.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> wreach_all(const Graph& g, const VertexOrdering& sigma, std::uint32_t d,
                                            unsigned threads) {
  check_ordering(g, sigma);
  std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> reached_from(n);
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  auto work = [&](unsigned w) {
    std::vector<std::int32_t> dist(n, -1);
    for (std::size_t v = w; v < n; v += workers)
      reach_up(g, sigma, static_cast<Vertex>(v), d, dist, reached_from[v]);
  };
  if (workers <= 1) work(0);
  else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : reached_from[v]) out[u].push_back(v);
  return out;  // each list is ascending because v runs in ascending order
}

std::size_t wcol_of_order(const Graph& g, const VertexOrdering& sigma, std::uint32_t d, unsigned threads) {
  std::size_t best = 0;
  for (auto& r : wreach_all(g, sigma, d, threads)) best = std::max(best, r.size());
  return best;
}

WcolExact wcol_exact(const Graph& g, std::uint32_t d) {
  std::size_t n = g.vertex_count();
  std::size_t guard = exhaustive_guard(8);
  if (n > guard) throw SizeError("exact wcol limited to " + std::to_string(guard) + " vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  WcolExact best{SIZE_MAX, VertexOrdering::identity(n)};
  if (n == 0) return {0, best.sigma};
  std::vector<std::int32_t> dist(n, -1);
  std::vector<Vertex> reached;
  std::vector<std::size_t> count(n);
  do {
    auto s = VertexOrdering::from_order(perm);
    std::fill(count.begin(), count.end(), 0);
    std::size_t worst = 0;
    for (Vertex v = 0; v < n && worst < best.value; ++v) {
      reach_up(g, s, v, d, dist, reached);
      for (Vertex u : reached) worst = std::max(worst, ++count[u]);
    }
    if (worst < best.value) best = {worst, s};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

VertexOrdering degeneracy_order(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> gone(n, 0);
  std::vector<Vertex> removal;
  while (!queue.empty()) {
    auto [dv, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return VertexOrdering::from_order(std::move(removal));
}

std::size_t degeneracy(const Graph& g) {
  auto s = degeneracy_order(g);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t back = 0;
    for (Vertex w : g.neighbors(v)) back += s.pos[w] < s.pos[v];
    best = std::max(best, back);
  }
  return best;
}

SparsityReport validate_uqw(const Graph& g, const UqwWitness& w, const std::vector<Vertex>* A) {
  auto bad = [](std::string why) { return SparsityReport{false, std::move(why)}; };
  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex v : w.deleted) {
    g.check_vertex(v);
    blocked[v] = 1;
  }
  std::set<Vertex> indep;
  for (Vertex v : w.independent) {
    g.check_vertex(v);
    if (blocked[v]) return bad("independent vertex " + std::to_string(v) + " is deleted");
    if (!indep.insert(v).second) return bad("independent set repeats vertex " + std::to_string(v));
    if (A && std::find(A->begin(), A->end(), v) == A->end())
      return bad("vertex " + std::to_string(v) + " is not in A");
  }
  for (Vertex v : w.independent) {
    auto dist = distances_avoiding(g, v, blocked);
    for (Vertex u : w.independent)
      if (u != v && dist.within(u, w.d))
        return bad("vertices " + std::to_string(v) + " and " + std::to_string(u) + " are within distance " +
                   std::to_string(w.d) + " after deletion");
  }
  return {};
}

std::uint64_t uqw_guarantee(std::size_t wcol, std::size_t m) {
  return labeled_sunflower_threshold(m + 1, wcol, 1);
}

std::optional<UqwWitness> uqw_extract(const Graph& g, const std::vector<Vertex>& A_in, std::uint32_t d,
                                      std::size_t m, const VertexOrdering& sigma) {
  if (d == 0 || m == 0) throw ArgumentError("uqw extraction needs d >= 1 and m >= 1");
  auto A = normalize_set(g, A_in);
  auto reach = wreach_all(g, sigma, d);
  std::size_t W = 0;
  for (auto& r : reach) W = std::max(W, r.size());
  std::vector<LabeledSet> family;
  for (Vertex v : A) {
    LabeledSet s;
    for (Vertex x : reach[v]) s.elements[x] = 0;
    family.push_back(std::move(s));
  }
  auto finish = [&](UqwWitness w) -> std::optional<UqwWitness> {
    std::sort(w.deleted.begin(), w.deleted.end());
    std::sort(w.independent.begin(), w.independent.end());
    auto rep = validate_uqw(g, w, &A);
    if (!rep.valid) throw InternalError("uqw extraction produced an invalid witness: " + rep.violation);
    return w;
  };

  if (auto sf = find_labeled_sunflower(family, m + 1, W, 1)) {
    std::vector<Vertex> members;
    for (auto i : sf->members) members.push_back(A[i]);
    // Drop the sigma-earliest member: every core element is weakly reachable from it,
    // hence no later than it, so the remaining members avoid the core.
    auto earliest = std::min_element(members.begin(), members.end(),
                                     [&](Vertex x, Vertex y) { return sigma.before(x, y); });
    members.erase(earliest);
    return finish({sf->core, members, d});
  }
  if (A.size() >= uqw_guarantee(W, m))
    throw InternalError("uqw extraction failed above its guarantee");
  if (auto sf = find_labeled_sunflower(family, m, W, 1)) {
    std::vector<Vertex> members;
    for (auto i : sf->members) members.push_back(A[i]);
    bool clear = std::none_of(members.begin(), members.end(), [&](Vertex v) {
      return std::binary_search(sf->core.begin(), sf->core.end(), v);
    });
    if (clear) return finish({sf->core, members, d});
  }
  return std::nullopt;
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> e;
  for (Vertex x = 0; x < left; ++x)
    for (std::size_t y = 0; y < right; ++y) e.emplace_back(x, static_cast<Vertex>(left + y));
  return Graph::from_edges(left + right, e);
}

SparsityReport validate_minor_model(const MinorModel& model) {
  auto bad = [](std::string why) { return SparsityReport{false, std::move(why)}; };
  const Graph& host = model.host;
  if (model.branch_sets.size() != model.pattern.vertex_count())
    return bad("branch set count does not match the pattern");
  std::vector<std::int64_t> owner(host.vertex_count(), -1);
  for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
    const auto& set = model.branch_sets[p];
    if (set.empty()) return bad("branch set " + std::to_string(p) + " is empty");
    for (Vertex v : set) {
      if (v >= host.vertex_count()) return bad("branch set " + std::to_string(p) + " has an out-of-range vertex");
      if (owner[v] >= 0)
        return bad("branch sets " + std::to_string(owner[v]) + " and " + std::to_string(p) +
                   " are not disjoint (vertex " + std::to_string(v) + ")");
      owner[v] = static_cast<std::int64_t>(p);
    }
  }
  for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
    const auto& set = model.branch_sets[p];
    std::vector<Vertex> stack{set[0]};
    std::set<Vertex> seen{set[0]};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : host.neighbors(x))
        if (owner[w] == static_cast<std::int64_t>(p) && seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != set.size()) return bad("branch set " + std::to_string(p) + " is not connected");
  }
  for (auto [x, y] : model.pattern.edges()) {
    bool realized = false;
    for (Vertex v : model.branch_sets[x]) {
      for (Vertex w : host.neighbors(v))
        if (owner[w] == static_cast<std::int64_t>(y)) {
          realized = true;
          break;
        }
      if (realized) break;
    }
    if (!realized)
      return bad("pattern edge " + std::to_string(x) + "-" + std::to_string(y) + " has no host edge");
  }
  return {};
}

namespace {

// In g - L, no vertex of S \ L is within distance d of v.
bool separates(const Graph& g, const std::vector<Vertex>& S, const std::vector<Vertex>& L, Vertex v,
               std::uint32_t d) {
  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex x : L) blocked[x] = 1;
  auto dist = distances_avoiding(g, v, blocked);
  for (Vertex s : S)
    if (!blocked[s] && dist.within(s, d)) return false;
  return true;
}

}  // namespace

std::vector<Vertex> minimal_separator(const Graph& g, const std::vector<Vertex>& S_in, Vertex v, std::uint32_t d) {
  auto S = normalize_set(g, S_in);
  std::vector<Vertex> L = S;
  for (Vertex s : S) {
    std::vector<Vertex> trial;
    for (Vertex x : L)
      if (x != s) trial.push_back(x);
    if (separates(g, S, trial, v, d)) L = std::move(trial);
  }
  return L;
}

KtReduceResult kt_reduce(const Graph& g, const std::vector<Vertex>& S_in, const std::vector<Vertex>& B_in,
                         std::uint32_t d, std::uint32_t t) {
  if (t < 4) throw ArgumentError("kt_reduce needs t >= 4");
  if (d == 0) throw ArgumentError("kt_reduce needs d >= 1");
  auto S = normalize_set(g, S_in);
  auto B = normalize_set(g, B_in);
  for (Vertex v : B)
    if (std::binary_search(S.begin(), S.end(), v)) throw ArgumentError("B must be disjoint from S");
  if (!validate_uqw(g, {S, B, 2 * d}).valid)
    throw ArgumentError("B is not distance-2d independent in g - S");

  std::map<Vertex, std::vector<Vertex>> L;
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (Vertex v : B) {
    L[v] = minimal_separator(g, S, v, d);
    std::vector<Vertex> key = L[v];
    if (key.size() > t - 2) key.resize(t - 1);
    groups[key].push_back(v);
  }
  const std::vector<Vertex>* C = nullptr;
  const std::vector<Vertex>* group = nullptr;
  for (auto& [key, members] : groups)
    if (!group || members.size() > group->size()) {
      C = &key;
      group = &members;
    }

  KtReduceResult res;
  if (!group) {
    res.branch = UqwWitness{{}, {}, 2 * d};
    return res;
  }
  res.core = *C;
  if (C->size() <= t - 2) {
    UqwWitness w{*C, *group, 2 * d};
    auto rep = validate_uqw(g, w);
    if (!rep.valid) throw InternalError("kt_reduce small-core branch failed validation: " + rep.violation);
    res.branch = std::move(w);
    return res;
  }

  std::vector<char> in_S(g.vertex_count(), 0);
  for (Vertex s : S) in_S[s] = 1;
  MinorModel model;
  model.host = g;
  model.pattern = complete_bipartite(group->size(), C->size());
  for (Vertex x : *group) {
    std::set<Vertex> branch;
    for (Vertex y : *C) {
      std::vector<char> blocked(g.vertex_count(), 0);
      for (Vertex z : L[x])
        if (z != y) blocked[z] = 1;
      auto path = tree_path(bfs_parents(g, x, blocked), y);
      if (path.empty() || path.size() - 1 > d) throw InternalError("kt_reduce: core vertex not within distance d");
      for (Vertex p : path)
        if (!in_S[p]) branch.insert(p);
    }
    model.branch_sets.emplace_back(branch.begin(), branch.end());
  }
  for (Vertex y : *C) model.branch_sets.push_back({y});
  auto rep = validate_minor_model(model);
  if (!rep.valid) throw InternalError("kt_reduce large-core branch failed validation: " + rep.violation);
  res.branch = std::move(model);
  return res;
}

}  // namespace ladderlab
