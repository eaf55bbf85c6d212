#include "ladderlab/generators.hpp"

#include <algorithm>
#include <functional>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

using Word = std::vector<int>;

std::string word_text(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

struct HBuild {
  Graph graph;
  std::vector<Vertex> a_leaves, b_leaves;
  LevelMap levels;
  std::vector<Edge> tree_edges;
};

HBuild build_h(int k, int h) {
  if (k < 2) throw ArgumentError("bounded-degree family needs k >= 2");
  if (h < 1) throw ArgumentError("bounded-degree family needs h >= 1");
  GraphBuilder gb;
  std::map<Word, Vertex> A, B;
  std::vector<std::int64_t> level;
  std::vector<char> on_tree;
  HBuild out;
  auto note = [&](Vertex v, std::int64_t lv, bool tree) {
    level.resize(v + 1, 0);
    on_tree.resize(v + 1, 0);
    level[v] = lv;
    on_tree[v] = tree;
  };

  // Depth-first in lexicographic order, so leaves come out in lexicographic order.
  std::function<void(Word&)> grow = [&](Word& w) {
    Vertex av = gb.add_vertex("a" + word_text(w));
    note(av, h - static_cast<int>(w.size()), true);
    Vertex bv = gb.add_vertex("b" + word_text(w));
    note(bv, h + static_cast<int>(w.size()) - 1, true);
    A[w] = av;
    B[w] = bv;
    if (static_cast<int>(w.size()) == h) {
      out.a_leaves.push_back(av);
      out.b_leaves.push_back(bv);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      w.push_back(c);
      grow(w);
      Vertex ac = A[w], bc = B[w];
      w.pop_back();
      gb.add_edge(av, ac);
      gb.add_edge(bv, bc);
      out.tree_edges.emplace_back(av, ac);
      out.tree_edges.emplace_back(bv, bc);
    }
  };
  Word root;
  grow(root);

  for (auto& [s, unused] : A) {
    if (static_cast<int>(s.size()) > h - 1) continue;
    std::size_t len = 2 * s.size() + 1;
    for (int c = 1; c <= k; ++c) {
      for (int d = c + 1; d <= k; ++d) {
        Word sd = s, sc = s;
        sd.push_back(d);
        sc.push_back(c);
        Vertex from = A[sd];
        std::size_t before = gb.vertex_count();
        gb.add_path(from, B[sc], len, "p" + word_text(sd) + word_text(sc));
        for (std::size_t t = 1; t < len; ++t)
          note(static_cast<Vertex>(before + t - 1), level[from] + static_cast<std::int64_t>(t), false);
      }
    }
  }
  out.graph = gb.build();
  out.levels = {level, on_tree};
  return out;
}

void check_bundle(const WitnessBundle& b) {
  auto rep = verify_certificate(b.graph, b.certificate);
  if (!rep.valid) throw InternalError(b.family + " construction produced an invalid certificate");
  if (b.certificate.order() != b.expected_order)
    throw InternalError(b.family + " construction produced the wrong order");
}

}  // namespace

WitnessBundle gen_bounded_degree(int k, int h) {
  auto hb = build_h(k, h);
  WitnessBundle b;
  b.family = "bounded-degree";
  b.params = {{"k", k}, {"h", h}};
  b.graph = std::move(hb.graph);
  b.expected_distance = static_cast<std::uint32_t>(2 * h - 1);
  b.certificate = {LadderKind::HalfGraph, b.expected_distance, hb.a_leaves, hb.b_leaves,
                   DiagonalConvention::Strict};
  std::uint64_t order = 1;
  for (int i = 0; i < h; ++i) order *= static_cast<std::uint64_t>(k);
  b.expected_order = order;
  check_bundle(b);
  if (b.graph.max_degree() > static_cast<std::size_t>(2 * k))
    throw InternalError("bounded-degree construction exceeds degree 2k");
  return b;
}

namespace {

HBuild rebuild_for(const WitnessBundle& bundle) {
  if (bundle.family != "bounded-degree" || !bundle.params.count("k") || !bundle.params.count("h"))
    throw ArgumentError("level map is only defined for bounded-degree bundles");
  auto hb = build_h(static_cast<int>(bundle.params.at("k")), static_cast<int>(bundle.params.at("h")));
  if (!(hb.graph == bundle.graph)) throw ArgumentError("bundle graph does not match its parameters");
  return hb;
}

}  // namespace

LevelMap level_map(const WitnessBundle& bundle) { return rebuild_for(bundle).levels; }

std::vector<Edge> word_tree_edges(const WitnessBundle& bundle) { return rebuild_for(bundle).tree_edges; }

WitnessBundle gen_planar_even(int h) {
  if (h < 1) throw ArgumentError("planar family needs h >= 1");
  auto hb = build_h(2, h);
  const Graph& base = hb.graph;
  std::vector<std::string> labels = base.labels();
  std::vector<Edge> edges = base.edges();
  std::vector<Vertex> pendants;
  Vertex next = static_cast<Vertex>(base.vertex_count());
  for (Vertex a : hb.a_leaves) {
    labels.push_back(base.label(a) + "'");
    edges.emplace_back(a, next);
    pendants.push_back(next++);
  }
  WitnessBundle b;
  b.family = "planar-even";
  b.params = {{"h", h}};
  b.graph = Graph::from_edges(next, edges, labels);
  b.expected_distance = static_cast<std::uint32_t>(2 * h);
  b.certificate = {LadderKind::HalfGraph, b.expected_distance, pendants, hb.b_leaves,
                   DiagonalConvention::Strict};
  b.expected_order = 1ULL << h;
  check_bundle(b);
  if (b.graph.vertex_count() >= 3 && b.graph.edge_count() > 3 * b.graph.vertex_count() - 6)
    throw InternalError("planar construction violates the Euler edge bound");
  return b;
}

namespace {

struct PwPart {
  std::vector<Vertex> a, b;
  std::map<Vertex, std::vector<std::vector<Vertex>>> appendices;
  std::vector<Bag> bags;
};

struct PwBuilder {
  int d;
  GraphBuilder gb;
  std::vector<char> dead;

  Vertex fresh(std::string label) {
    dead.push_back(0);
    return gb.add_vertex(std::move(label));
  }

  void add_appendices(PwPart& part, Vertex c, int k, const std::string& name) {
    if (k == 0) {
      part.bags.push_back({c});
      return;
    }
    for (int e = 0; e < k; ++e) {
      std::vector<Vertex> app;
      Vertex prev = c;
      for (int t = 1; t <= 3 * d; ++t) {
        Vertex v = fresh(name + "~" + std::to_string(e + 1) + "." + std::to_string(t));
        gb.add_edge(prev, v);
        if (prev == c) part.bags.push_back({c, v});
        else part.bags.push_back({c, prev, v});
        app.push_back(v);
        prev = v;
      }
      part.appendices[c].push_back(std::move(app));
    }
  }

  // Joins anchor to r by a path of `len` edges made from one of its appendices.
  void consume(PwPart& part, Vertex anchor, Vertex r, int len) {
    auto& apps = part.appendices[anchor];
    std::vector<Vertex> app = std::move(apps.back());
    apps.pop_back();
    int pos = len - 1;  // appendix vertex at this distance from the anchor gets the edge to r
    gb.add_edge(r, pos == 0 ? anchor : app[pos - 1]);
    for (std::size_t t = static_cast<std::size_t>(pos); t < app.size(); ++t) dead[app[t]] = 1;
  }

  PwPart build(int p, int k, const std::string& prefix) {
    PwPart part;
    if (p == 0) {
      Vertex ca = fresh(prefix + "a");
      Vertex cb = fresh(prefix + "b");
      part.a = {ca};
      part.b = {cb};
      add_appendices(part, ca, k, prefix + "a");
      add_appendices(part, cb, k, prefix + "b");
      return part;
    }
    std::vector<PwPart> copies;
    for (int j = 1; j <= 2 * d + 1; ++j)
      copies.push_back(build(p - 1, k + 1, prefix + "c" + std::to_string(j) + "."));
    Vertex r = fresh(prefix + "r");
    for (int j = 1; j <= 2 * d + 1; ++j) {
      auto& c = copies[j - 1];
      for (Vertex bv : c.b) consume(c, bv, r, d + (j - 1));
      for (Vertex av : c.a) consume(c, av, r, 3 * d - (j - 1));
    }
    for (auto& c : copies) {
      part.a.insert(part.a.end(), c.a.begin(), c.a.end());
      part.b.insert(part.b.end(), c.b.begin(), c.b.end());
      for (auto& [v, apps] : c.appendices) part.appendices[v] = std::move(apps);
      for (auto& bag : c.bags) {
        Bag kept;
        for (Vertex v : bag)
          if (!dead[v]) kept.push_back(v);
        if (kept.empty()) continue;
        kept.push_back(r);
        part.bags.push_back(std::move(kept));
      }
    }
    return part;
  }
};

}  // namespace

WitnessBundle gen_pathwidth(int p, int d, int k) {
  if (p < 0 || d < 1 || k < 0) throw ArgumentError("pathwidth family needs p >= 0, d >= 1, k >= 0");
  std::uint64_t order = 1;
  for (int i = 0; i < p; ++i) {
    order *= static_cast<std::uint64_t>(2 * d + 1);
    if (order > (1ULL << 20)) throw SizeError("pathwidth family order too large");
  }
  PwBuilder pb{d, {}, {}};
  PwPart part = pb.build(p, k, "");
  for (std::size_t i = 0; i < part.a.size(); ++i)
    pb.gb.set_label(part.a[i], "a_" + std::to_string(i + 1) + "[" + pb.gb.label(part.a[i]) + "]");
  for (std::size_t i = 0; i < part.b.size(); ++i)
    pb.gb.set_label(part.b[i], "b_" + std::to_string(i + 1) + "[" + pb.gb.label(part.b[i]) + "]");
  Graph full = pb.gb.build();

  std::vector<Vertex> removed, kept;
  for (Vertex v = 0; v < pb.dead.size(); ++v)
    if (pb.dead[v]) removed.push_back(v);
  Graph g = remove_vertices(full, removed, &kept);
  std::vector<std::int64_t> remap(full.vertex_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) remap[kept[i]] = static_cast<std::int64_t>(i);
  auto map_v = [&](Vertex v) { return static_cast<Vertex>(remap[v]); };

  WitnessBundle b;
  b.family = "pathwidth";
  b.params = {{"p", p}, {"d", d}, {"k", k}};
  b.graph = std::move(g);
  b.expected_distance = static_cast<std::uint32_t>(4 * d - 1);
  b.certificate.kind = LadderKind::HalfGraph;
  b.certificate.d = b.expected_distance;
  for (Vertex v : part.a) b.certificate.a.push_back(map_v(v));
  for (Vertex v : part.b) b.certificate.b.push_back(map_v(v));
  PathDecomposition pd;
  for (auto& bag : part.bags) {
    Bag nb;
    for (Vertex v : bag) nb.push_back(map_v(v));
    sort_bag(nb);
    pd.bags.push_back(std::move(nb));
  }
  b.path_decomposition = std::move(pd);
  b.expected_order = order;
  b.expected_width = static_cast<std::size_t>(p + 2);
  check_bundle(b);
  auto rep = validate_path_decomposition(b.graph, *b.path_decomposition);
  if (!rep.valid || rep.width > static_cast<std::size_t>(p + 2))
    throw InternalError("pathwidth construction produced a bad decomposition: " + rep.violation);
  return b;
}

namespace {

PairedGraph finish(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels,
                   PairingDecomposition dec, const char* what) {
  for (auto& bag : dec.base.bags) sort_bag(bag);
  PairedGraph out{Graph::from_edges(n, edges, std::move(labels)), std::move(dec)};
  auto rep = validate_pairing(out.graph, out.dec);
  if (!rep.valid) throw InternalError(std::string(what) + " produced an invalid pairing decomposition: " + rep.violation);
  return out;
}

PairedGraph base_seed() {
  // A B x a1 b1 a2 b2
  std::vector<std::string> labels{"A", "B", "x", "a1", "b1", "a2", "b2"};
  std::vector<Edge> edges{{0, 1}, {3, 0}, {0, 5}, {4, 1}, {1, 6}, {4, 2}, {2, 5}};
  PairingDecomposition p;
  p.d = 1;
  p.base.bags = {{0, 1}, {0, 1, 2}, {3, 0, 1, 2}, {3, 4, 1, 2}, {3, 4},
                 {6, 0, 1, 2}, {5, 6, 0, 2}, {5, 6}};
  p.base.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 7}};
  p.base.root = 0;
  p.root_pair = {0, 1};
  p.leaf_pairs = {{3, 4}, {5, 6}};
  p.leaf_nodes = {4, 7};
  return finish(7, edges, labels, p, "base seed");
}

}  // namespace

PairedGraph gen_pairing_seed(SeedMode mode, int param) {
  PairedGraph base = base_seed();
  if (mode == SeedMode::Base) return base;
  std::vector<Edge> edges = base.graph.edges();
  std::vector<std::string> labels = base.graph.labels();
  PairingDecomposition p = base.dec;
  std::size_t n = base.graph.vertex_count();

  if (mode == SeedMode::Lengthen) {
    int d = param;
    if (d < 2) throw ArgumentError("lengthen needs d >= 2");
    p.d = static_cast<std::uint32_t>(d);
    for (std::size_t i = 0; i < p.leaf_pairs.size(); ++i) {
      auto [x, y] = p.leaf_pairs[i];
      std::vector<Vertex> xs{x}, ys{y};
      for (int t = 1; t < d; ++t) {
        Vertex nx = static_cast<Vertex>(n++), ny = static_cast<Vertex>(n++);
        labels.push_back(labels[x] + "+" + std::to_string(t));
        labels.push_back(labels[y] + "+" + std::to_string(t));
        edges.emplace_back(xs.back(), nx);
        edges.emplace_back(ys.back(), ny);
        xs.push_back(nx);
        ys.push_back(ny);
      }
      std::size_t prev = p.leaf_nodes[i];
      for (int t = 0; t + 1 < d; ++t) {
        p.base.bags.push_back({xs[t], ys[t], xs[t + 1], ys[t + 1]});
        p.base.tree_edges.emplace_back(prev, p.base.bags.size() - 1);
        prev = p.base.bags.size() - 1;
      }
      p.base.bags.push_back({xs.back(), ys.back()});
      p.base.tree_edges.emplace_back(prev, p.base.bags.size() - 1);
      p.leaf_nodes[i] = p.base.bags.size() - 1;
      p.leaf_pairs[i] = {xs.back(), ys.back()};
    }
    return finish(n, edges, labels, p, "lengthen");
  }

  int k = param;
  if (k < 2) throw ArgumentError("widen needs k >= 2");
  std::vector<Vertex> extra;
  for (int i = 0; i < 2 * (k - 1); ++i) {
    extra.push_back(static_cast<Vertex>(n++));
    labels.push_back("w" + std::to_string(i + 1));
  }
  for (std::size_t x = 0; x < p.base.bags.size(); ++x) {
    bool outer = x == *p.base.root ||
                 std::find(p.leaf_nodes.begin(), p.leaf_nodes.end(), x) != p.leaf_nodes.end();
    if (!outer) p.base.bags[x].insert(p.base.bags[x].end(), extra.begin(), extra.end());
  }
  return finish(n, edges, labels, p, "widen");
}

PairedGraph make_neighboring(const PairedGraph& x) {
  auto rep = validate_pairing(x.graph, x.dec);
  if (!rep.valid) throw StructuralError("make_neighboring needs a valid pairing decomposition: " + rep.violation);
  std::size_t n = x.graph.vertex_count();
  Vertex A = static_cast<Vertex>(n), B = static_cast<Vertex>(n + 1);
  std::vector<Edge> edges = x.graph.edges();
  std::vector<std::string> labels = x.graph.labels();
  if (labels.empty()) labels.resize(n);
  labels.push_back("A'");
  labels.push_back("B'");
  for (auto [a, b] : x.dec.leaf_pairs) {
    edges.emplace_back(a, A);
    edges.emplace_back(b, B);
  }
  PairingDecomposition p = x.dec;
  for (auto& bag : p.base.bags) {
    bag.push_back(A);
    bag.push_back(B);
  }
  for (std::size_t i = 0; i < p.leaf_nodes.size(); ++i) {
    std::size_t old = p.leaf_nodes[i];
    p.base.bags.push_back(x.dec.base.bags[old]);
    p.base.tree_edges.emplace_back(old, p.base.bags.size() - 1);
    p.leaf_nodes[i] = p.base.bags.size() - 1;
  }
  p.base.bags.push_back({A, B});
  p.base.tree_edges.emplace_back(*x.dec.base.root, p.base.bags.size() - 1);
  p.base.root = p.base.bags.size() - 1;
  p.root_pair = {A, B};
  p.neighboring = true;
  return finish(n + 2, edges, labels, p, "make_neighboring");
}

PairedGraph combine(const PairedGraph& g, const PairedGraph& h) {
  const auto& G = g.dec;
  const auto& H = h.dec;
  if (H.d < 2 || G.d + 1 != H.d) throw ArgumentError("combine needs distances d-1 and d with d >= 2");
  if (G.order() < 2 || H.order() < 2) throw ArgumentError("combine needs both orders >= 2");
  if (G.width() < 3 || H.width() + 2 > G.width())
    throw ArgumentError("combine needs width(g) = t >= 3 and width(h) <= t-2");
  if (!validate_pairing(g.graph, G).valid) throw StructuralError("combine: first input is not a valid pairing");
  PairedGraph hn = make_neighboring(h);
  const auto& N = hn.dec;

  std::size_t n = g.graph.vertex_count();
  std::vector<Edge> edges = g.graph.edges();
  std::vector<std::string> labels = g.graph.labels();
  if (labels.empty()) labels.resize(n);
  PairingDecomposition p;
  p.d = H.d;
  p.base.bags = G.base.bags;
  p.base.tree_edges = G.base.tree_edges;
  p.base.root = G.base.root;
  p.root_pair = G.root_pair;

  for (std::size_t i = 0; i < G.order(); ++i) {
    std::vector<Vertex> vmap(hn.graph.vertex_count());
    for (Vertex v = 0; v < hn.graph.vertex_count(); ++v) {
      if (v == N.root_pair.first) vmap[v] = G.leaf_pairs[i].first;
      else if (v == N.root_pair.second) vmap[v] = G.leaf_pairs[i].second;
      else {
        vmap[v] = static_cast<Vertex>(n++);
        labels.push_back("h" + std::to_string(i + 1) + "." + hn.graph.label(v));
      }
    }
    for (auto [u, v] : hn.graph.edges()) edges.emplace_back(vmap[u], vmap[v]);
    std::vector<std::size_t> nmap(N.base.bags.size());
    for (std::size_t x = 0; x < N.base.bags.size(); ++x) {
      if (x == *N.base.root) {
        nmap[x] = G.leaf_nodes[i];
        continue;
      }
      Bag bag;
      for (Vertex v : N.base.bags[x]) bag.push_back(vmap[v]);
      p.base.bags.push_back(std::move(bag));
      nmap[x] = p.base.bags.size() - 1;
    }
    for (auto [x, y] : N.base.tree_edges) p.base.tree_edges.emplace_back(nmap[x], nmap[y]);
    for (std::size_t j = 0; j < N.order(); ++j) {
      p.leaf_pairs.emplace_back(vmap[N.leaf_pairs[j].first], vmap[N.leaf_pairs[j].second]);
      p.leaf_nodes.push_back(nmap[N.leaf_nodes[j]]);
    }
  }
  return finish(n, edges, labels, p, "combine");
}

std::optional<std::uint64_t> treewidth_order(int d, int k) {
  if (d < 1 || k < 1) throw ArgumentError("treewidth family needs d >= 1 and k >= 1");
  // binom(d+k-2, k-1), stopping once it passes 62.
  std::uint64_t n = static_cast<std::uint64_t>(d + k - 2), r = static_cast<std::uint64_t>(k - 1);
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > 62) return std::nullopt;
  }
  if (c > 62) return std::nullopt;
  return 1ULL << c;
}

PairedGraph build_treewidth_pairing(int d, int k, std::uint64_t order_cap) {
  auto order = treewidth_order(d, k);
  if (!order || *order > order_cap)
    throw SizeError("treewidth family order " + (order ? std::to_string(*order) : std::string("> 2^62")) +
                    " exceeds cap " + std::to_string(order_cap));
  std::map<std::pair<int, int>, PairedGraph> memo;
  std::function<const PairedGraph&(int, int)> get = [&](int dd, int kk) -> const PairedGraph& {
    auto key = std::make_pair(dd, kk);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    PairedGraph built;
    if (dd == 1 && kk == 1) built = gen_pairing_seed(SeedMode::Base);
    else if (kk == 1) built = gen_pairing_seed(SeedMode::Lengthen, dd);
    else if (dd == 1) built = gen_pairing_seed(SeedMode::Widen, kk);
    else built = combine(get(dd - 1, kk), get(dd, kk - 1));
    return memo.emplace(key, std::move(built)).first->second;
  };
  return get(d, k);
}

LadderCertificate pairing_certificate(const PairingDecomposition& p) {
  LadderCertificate c{LadderKind::HalfGraph, 2 * p.d, {}, {}, DiagonalConvention::Strict};
  for (auto [a, b] : p.leaf_pairs) {
    c.a.push_back(a);
    c.b.push_back(b);
  }
  return c;
}

WitnessBundle gen_treewidth(int d, int k, std::uint64_t order_cap) {
  PairedGraph pg = build_treewidth_pairing(d, k, order_cap);
  WitnessBundle b;
  b.family = "treewidth";
  b.params = {{"d", d}, {"k", k}};
  b.graph = std::move(pg.graph);
  b.certificate = pairing_certificate(pg.dec);
  b.pairing = std::move(pg.dec);
  b.expected_order = *treewidth_order(d, k);
  b.expected_distance = static_cast<std::uint32_t>(2 * d);
  b.expected_width = static_cast<std::size_t>(2 * k + 1);
  check_bundle(b);
  if (b.pairing->width() != *b.expected_width) throw InternalError("treewidth construction has the wrong width");
  return b;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
    }
  return Graph::from_edges(rows * cols, e);
}

Graph edgeless_graph(std::size_t n) { return Graph::from_edges(n, {}); }

}  // namespace ladderlab
