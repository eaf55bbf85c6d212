#include <doctest.h>

#include <set>

#include "ladderlab/decomposition.hpp"
#include "ladderlab/generators.hpp"
#include "oracles.hpp"

using namespace ladderlab;

namespace {

// One bag per edge of a rooted tree; children of the root are chained together.
TreeDecomposition edge_bags(const Graph& tree, Vertex root) {
  auto parent = bfs_parents(tree, root);
  TreeDecomposition td;
  std::vector<std::size_t> node_of(tree.vertex_count(), SIZE_MAX);
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (v == root) continue;
    node_of[v] = td.bags.size();
    Bag bag{static_cast<Vertex>(parent[v]), v};
    sort_bag(bag);
    td.bags.push_back(bag);
  }
  std::size_t prev_top = SIZE_MAX;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (v == root) continue;
    Vertex p = static_cast<Vertex>(parent[v]);
    if (p != root) {
      td.tree_edges.push_back({node_of[v], node_of[p]});
    } else {
      if (prev_top != SIZE_MAX) td.tree_edges.push_back({prev_top, node_of[v]});
      prev_top = node_of[v];
    }
  }
  return td;
}

}  // namespace

TEST_CASE("path decompositions") {
  Graph p3 = path_graph(3);
  auto r = validate_path_decomposition(p3, {{{0, 1}, {1, 2}}});
  CHECK(r.valid);
  CHECK(r.width == 1);
  CHECK(validate_path_decomposition(p3, {{{1, 2}, {0, 1}}}).valid);

  auto tri = validate_path_decomposition(complete_graph(3), {{{0, 1}, {1, 2}}});
  CHECK_FALSE(tri.valid);
  CHECK(tri.violation.find("0-2") != std::string::npos);

  auto gap = validate_path_decomposition(p3, {{{0, 1}, {1, 2}, {0}}});
  CHECK_FALSE(gap.valid);
  CHECK(gap.vertex == 0u);
}

TEST_CASE("tree decompositions") {
  Graph g = grid_graph(2, 3);
  TreeDecomposition all{{{0, 1, 2, 3, 4, 5}}, {}, 0};
  auto r = validate_tree_decomposition(g, all);
  CHECK(r.valid);
  CHECK(r.width == 5);

  auto rng = oracle::seeded_rng(std::cout, "decomposition-trees");
  for (int trial = 0; trial < 50; ++trial) {
    Graph t = oracle::random_tree(2 + rng() % 15, rng);
    auto td = edge_bags(t, 0);
    auto rep = validate_tree_decomposition(t, td);
    CHECK(rep.valid);
    CHECK(rep.width == 1);
  }

  // star K_{1,3}: edge bags chained 1-2-3; cutting the chain strands vertex 0
  auto td = edge_bags(star_graph(3), 0);
  REQUIRE(validate_tree_decomposition(star_graph(3), td).valid);
  td.tree_edges = {{0, 1}};
  td.bags.push_back({});
  td.tree_edges.push_back({1, 3});
  td.tree_edges.push_back({3, 2});
  auto broken = validate_tree_decomposition(star_graph(3), td);
  CHECK_FALSE(broken.valid);
  CHECK(broken.vertex == 0u);
}

TEST_CASE("nice form") {
  Graph p3 = path_graph(3);
  auto nice = to_nice(p3, {{{0, 1}, {1, 2}}});
  std::vector<Bag> want{{}, {0}, {0, 1}, {1}, {1, 2}, {2}, {}};
  CHECK(nice.bags == want);
  CHECK(is_nice(nice));
  CHECK(to_nice(p3, nice) == nice);
  CHECK(introduce_index(nice, 2) == 4u);
  CHECK_THROWS(to_nice(complete_graph(3), {{{0, 1}, {1, 2}}}));

  auto rng = oracle::seeded_rng(std::cout, "decomposition-nice");
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::gnp(3 + rng() % 12, 0.25, rng);
    auto pd = layer_path_decomposition(g);
    auto base = validate_path_decomposition(g, pd);
    REQUIRE(base.valid);
    auto nd = to_nice(g, pd);
    auto rep = validate_path_decomposition(g, nd);
    CHECK(rep.valid);
    CHECK(rep.width == base.width);
    CHECK(is_nice(nd));
    CHECK(nd.bags.size() == 2 * g.vertex_count() + 1);
    std::set<std::size_t> intro;
    for (Vertex v = 0; v < g.vertex_count(); ++v) intro.insert(*introduce_index(nd, v));
    CHECK(intro.size() == g.vertex_count());
  }
}

TEST_CASE("pairing decompositions") {
  auto seed = gen_pairing_seed(SeedMode::Base);
  auto r = validate_pairing(seed.graph, seed.dec);
  CHECK(r.valid);
  CHECK(r.width == 3);
  CHECK(seed.dec.order() == 2);

  auto flagged = seed.dec;
  flagged.neighboring = true;
  CHECK_FALSE(validate_pairing(seed.graph, flagged).valid);

  // subdivide the edge x-a_2, making dist(b_1, a_2) = 3 instead of 2
  Vertex x = *seed.graph.find_label("x");
  Vertex a2 = *seed.graph.find_label("a2");
  std::vector<Edge> e;
  for (auto uv : seed.graph.edges())
    if (uv != Edge{std::min(x, a2), std::max(x, a2)}) e.push_back(uv);
  Vertex mid = static_cast<Vertex>(seed.graph.vertex_count());
  e.push_back({x, mid});
  e.push_back({a2, mid});
  Graph longer = Graph::from_edges(mid + 1, e);
  auto dec = seed.dec;
  for (auto& bag : dec.base.bags)
    if (std::count(bag.begin(), bag.end(), x) && std::count(bag.begin(), bag.end(), a2)) {
      bag.push_back(mid);
      sort_bag(bag);
    }
  auto bad = validate_pairing(longer, dec);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.pair);
  CHECK(*bad.pair == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("widths of generated decompositions") {
  for (auto [p, d] : {std::pair{0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    auto b = gen_pathwidth(p, d, 0);
    REQUIRE(b.path_decomposition);
    auto r = validate_path_decomposition(b.graph, *b.path_decomposition);
    CHECK(r.valid);
    CHECK(r.width <= static_cast<std::size_t>(p + 2));
  }
  for (auto [d, k] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}}) {
    auto x = build_treewidth_pairing(d, k);
    auto r = validate_pairing(x.graph, x.dec);
    CHECK(r.valid);
    CHECK(r.width == static_cast<std::size_t>(2 * k + 1));
  }
}
