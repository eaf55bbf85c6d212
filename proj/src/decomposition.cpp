#include "ladderlab/decomposition.hpp"

#include <algorithm>
#include <set>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

std::size_t max_bag_width(const std::vector<Bag>& bags) {
  std::size_t best = 0;
  for (auto& b : bags) best = std::max(best, b.size());
  return best == 0 ? 0 : best - 1;
}

DecompositionReport fail(DecompositionReport r, std::string why, std::optional<Vertex> v = {}) {
  r.valid = false;
  r.violation = std::move(why);
  r.vertex = v;
  return r;
}

std::vector<Bag> normalized(const Graph& g, const std::vector<Bag>& bags) {
  std::vector<Bag> out = bags;
  for (auto& b : out) {
    for (Vertex v : b) g.check_vertex(v);
    sort_bag(b);
  }
  return out;
}

// Edge coverage via a per-vertex list of bag indices; shared by the path and tree validators.
std::optional<Edge> uncovered_edge(const Graph& g, const std::vector<std::vector<std::size_t>>& where,
                                   const std::vector<Bag>& bags) {
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t i : where[u]) {
      if (std::binary_search(bags[i].begin(), bags[i].end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return Edge{u, v};
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> occurrences(const Graph& g, const std::vector<Bag>& bags) {
  std::vector<std::vector<std::size_t>> where(g.vertex_count());
  for (std::size_t i = 0; i < bags.size(); ++i)
    for (Vertex v : bags[i]) where[v].push_back(i);
  return where;
}

bool bag_is(const Bag& bag, Vertex x, Vertex y) {
  return bag.size() == 2 && bag[0] == std::min(x, y) && bag[1] == std::max(x, y);
}

}  // namespace

void sort_bag(Bag& bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
}

std::size_t PathDecomposition::width() const { return max_bag_width(bags); }
std::size_t TreeDecomposition::width() const { return max_bag_width(bags); }

DecompositionReport validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  auto bags = normalized(g, pd.bags);
  DecompositionReport r;
  r.width = max_bag_width(bags);
  auto where = occurrences(g, bags);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (where[v].empty()) {
      r.covers_all_vertices = false;
      continue;
    }
    if (where[v].back() - where[v].front() + 1 != where[v].size())
      return fail(r, "vertex " + std::to_string(v) + " appears in non-contiguous bags", v);
  }
  if (auto e = uncovered_edge(g, where, bags))
    return fail(r, "edge " + std::to_string(e->first) + "-" + std::to_string(e->second) + " not covered",
                e->first);
  return r;
}

DecompositionReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  auto bags = normalized(g, td.bags);
  DecompositionReport r;
  r.width = max_bag_width(bags);
  std::size_t k = bags.size();
  if (k == 0) {
    if (g.edge_count() > 0) return fail(r, "no bags");
    r.covers_all_vertices = g.vertex_count() == 0;
    return r;
  }
  if (td.root && *td.root >= k) return fail(r, "root node out of range");
  if (td.tree_edges.size() != k - 1) return fail(r, "bag tree has wrong number of edges");
  std::vector<std::vector<std::size_t>> adj(k);
  for (auto [x, y] : td.tree_edges) {
    if (x >= k || y >= k || x == y) return fail(r, "bad bag tree edge");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != k) return fail(r, "bag tree is not connected");

  auto where = occurrences(g, bags);
  std::vector<char> holds(k, 0), mark(k, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (where[v].empty()) {
      r.covers_all_vertices = false;
      continue;
    }
    for (auto i : where[v]) holds[i] = 1;
    std::vector<std::size_t> st{where[v][0]};
    mark[where[v][0]] = 1;
    std::size_t got = 1;
    while (!st.empty()) {
      auto x = st.back();
      st.pop_back();
      for (auto y : adj[x])
        if (holds[y] && !mark[y]) {
          mark[y] = 1;
          ++got;
          st.push_back(y);
        }
    }
    for (auto i : where[v]) holds[i] = mark[i] = 0;
    if (got != where[v].size())
      return fail(r, "bags containing vertex " + std::to_string(v) + " are not connected in the tree", v);
  }
  if (auto e = uncovered_edge(g, where, bags))
    return fail(r, "edge " + std::to_string(e->first) + "-" + std::to_string(e->second) + " not covered",
                e->first);
  return r;
}

PathDecomposition to_nice(const Graph& g, const PathDecomposition& pd) {
  auto report = validate_path_decomposition(g, pd);
  if (!report.valid) throw StructuralError("to_nice needs a valid decomposition: " + report.violation);
  auto bags = normalized(g, pd.bags);
  PathDecomposition out;
  Bag cur;
  out.bags.push_back(cur);
  auto step_to = [&](const Bag& next) {
    Bag forget, introduce;
    std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(), std::back_inserter(forget));
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(), std::back_inserter(introduce));
    for (Vertex v : forget) {
      cur.erase(std::lower_bound(cur.begin(), cur.end(), v));
      out.bags.push_back(cur);
    }
    for (Vertex v : introduce) {
      cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
      out.bags.push_back(cur);
    }
  };
  for (auto& b : bags) step_to(b);
  step_to({});
  return out;
}

bool is_nice(const PathDecomposition& pd) {
  if (pd.bags.empty() || !pd.bags.front().empty() || !pd.bags.back().empty()) return false;
  for (std::size_t i = 1; i < pd.bags.size(); ++i) {
    const auto& x = pd.bags[i - 1];
    const auto& y = pd.bags[i];
    const auto& big = x.size() > y.size() ? x : y;
    const auto& small = x.size() > y.size() ? y : x;
    if (big.size() != small.size() + 1) return false;
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
  }
  return true;
}

std::optional<std::size_t> introduce_index(const PathDecomposition& nice, Vertex v) {
  for (std::size_t i = 1; i < nice.bags.size(); ++i) {
    const auto& cur = nice.bags[i];
    if (cur.size() == nice.bags[i - 1].size() + 1 && std::binary_search(cur.begin(), cur.end(), v) &&
        !std::binary_search(nice.bags[i - 1].begin(), nice.bags[i - 1].end(), v))
      return i;
  }
  return std::nullopt;
}

TreeDecomposition path_as_tree(const PathDecomposition& pd) {
  TreeDecomposition td;
  td.bags = pd.bags;
  for (std::size_t i = 1; i < pd.bags.size(); ++i) td.tree_edges.emplace_back(i - 1, i);
  if (!pd.bags.empty()) td.root = 0;
  return td;
}

DecompositionReport validate_pairing(const Graph& g, const PairingDecomposition& p, unsigned threads) {
  DecompositionReport r = validate_tree_decomposition(g, p.base);
  if (!r.valid) return r;
  if (p.d == 0) return fail(r, "distance parameter must be positive");
  if (!p.base.root) return fail(r, "pairing decomposition must be rooted");
  auto bags = normalized(g, p.base.bags);
  std::size_t root = *p.base.root;
  auto [A, B] = p.root_pair;
  g.check_vertex(A);
  g.check_vertex(B);
  if (!bag_is(bags[root], A, B)) return fail(r, "root bag is not {A,B}");

  std::size_t l = p.leaf_pairs.size();
  if (l == 0) return fail(r, "no leaf pairs");
  if (p.leaf_nodes.size() != l) return fail(r, "leaf_nodes and leaf_pairs differ in length");
  std::vector<std::size_t> degree(bags.size(), 0);
  for (auto [x, y] : p.base.tree_edges) {
    ++degree[x];
    ++degree[y];
  }
  std::set<std::size_t> tree_leaves;
  for (std::size_t x = 0; x < bags.size(); ++x)
    if (x != root && degree[x] <= 1) tree_leaves.insert(x);
  std::set<std::size_t> named(p.leaf_nodes.begin(), p.leaf_nodes.end());
  if (named != tree_leaves || named.size() != l) return fail(r, "leaf_nodes are not exactly the leaves of the tree");

  std::set<Vertex> distinct{A, B};
  for (std::size_t i = 0; i < l; ++i) {
    auto [a, b] = p.leaf_pairs[i];
    g.check_vertex(a);
    g.check_vertex(b);
    if (!bag_is(bags[p.leaf_nodes[i]], a, b))
      return fail(r, "leaf bag " + std::to_string(i + 1) + " is not {a_i,b_i}");
    if (!distinct.insert(a).second || !distinct.insert(b).second)
      return fail(r, "named vertices are not pairwise distinct");
  }
  if (distinct.size() != 2 * l + 2) return fail(r, "named vertices are not pairwise distinct");

  std::vector<Vertex> bs;
  for (auto& lp : p.leaf_pairs) bs.push_back(lp.second);
  auto rows = distances_from_many(g, bs, threads);
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t j = 1; j <= l; ++j) {
      std::uint32_t want = i < j ? 2 * p.d : 2 * p.d + 1;
      auto got = rows[i - 1].get(p.leaf_pairs[j - 1].first);
      if (got != want) {
        r = fail(r, "dist(b_" + std::to_string(i) + ", a_" + std::to_string(j) + ") = " +
                        (got ? std::to_string(*got) : std::string("inf")) + ", expected " +
                        std::to_string(want));
        r.pair = std::make_pair(i, j);
        return r;
      }
    }
  }

  if (p.neighboring) {
    std::set<Vertex> as, bset;
    for (auto [a, b] : p.leaf_pairs) {
      as.insert(a);
      bset.insert(b);
    }
    for (Vertex w : g.neighbors(A))
      if (!as.count(w)) return fail(r, "A is adjacent to " + std::to_string(w) + ", not an a-vertex", w);
    for (Vertex w : g.neighbors(B))
      if (!bset.count(w)) return fail(r, "B is adjacent to " + std::to_string(w) + ", not a b-vertex", w);
    auto from_B = distances_from(g, B);
    for (std::size_t i = 0; i < l; ++i) {
      auto [a, b] = p.leaf_pairs[i];
      if (!g.adjacent(a, A) || !g.adjacent(b, B))
        return fail(r, "leaf pair " + std::to_string(i + 1) + " not adjacent to its root vertex");
      if (from_B.within(a, 2 * p.d)) return fail(r, "dist(a_" + std::to_string(i + 1) + ", B) < 2d+1", a);
      if (rows[i].within(A, 2 * p.d)) return fail(r, "dist(b_" + std::to_string(i + 1) + ", A) < 2d+1", b);
    }
  }
  return r;
}

}  // namespace ladderlab

namespace ladderlab {

PathDecomposition layer_path_decomposition(const Graph& g) {
  PathDecomposition pd;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    auto dist = distances_from(g, s);
    std::vector<Bag> layers;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!dist.reachable(v)) continue;
      seen[v] = 1;
      std::size_t l = *dist.get(v);
      if (layers.size() <= l) layers.resize(l + 1);
      layers[l].push_back(v);
    }
    if (layers.size() == 1) {
      pd.bags.push_back(layers[0]);
      continue;
    }
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
      Bag bag = layers[i];
      bag.insert(bag.end(), layers[i + 1].begin(), layers[i + 1].end());
      sort_bag(bag);
      pd.bags.push_back(std::move(bag));
    }
  }
  return pd;
}

}  // namespace ladderlab
