// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ladderlab/bounds.hpp"
#include "ladderlab/cages.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/generators.hpp"
#include "ladderlab/sparsity.hpp"
#include "ladderlab/sunflower.hpp"
#include "oracles.hpp"

using namespace ladderlab;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (!failures++) first_failure = what;
  }
};

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string str(const std::string& s) { return s; }
template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------

void families_bounded_degree(Outcome& o) {
  for (auto [k, h] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 1}, {2, 4}}) {
    auto b = gen_bounded_degree(k, h);
    std::string tag = "H(" + str(k) + "," + str(h) + ")";
    std::uint64_t want = 1;
    for (int i = 0; i < h; ++i) want *= k;
    o.expect(b.certificate.kind == LadderKind::HalfGraph, tag + " kind");
    o.expect(b.certificate.order() == want, tag + " order");
    o.expect(b.certificate.d == static_cast<std::uint32_t>(2 * h - 1), tag + " distance");
    o.expect(b.graph.max_degree() <= static_cast<std::size_t>(2 * k), tag + " degree");
    o.expect(verify_certificate(b.graph, b.certificate).valid, tag + " verify");
    o.expect(oracle::ladder_holds(oracle::all_pairs(b.graph), b.certificate), tag + " oracle");
  }
  auto h23 = gen_bounded_degree(2, 3);
  o.expect(h23.certificate.order() == 8 && h23.certificate.d == 5, "H(2,3) is order 8 at d=5");
  o.summary = "6 parameter pairs";
}

void families_pathwidth(Outcome& o) {
  for (auto [p, d] : {std::pair{1, 1}, {2, 1}, {3, 1}, {1, 2}}) {
    auto b = gen_pathwidth(p, d, 0);
    std::string tag = "P(" + str(p) + "," + str(d) + ")";
    std::uint64_t want = 1;
    for (int i = 0; i < p; ++i) want *= 2 * d + 1;
    o.expect(b.certificate.order() == want, tag + " order");
    o.expect(b.certificate.d == static_cast<std::uint32_t>(4 * d - 1), tag + " distance");
    o.expect(verify_certificate(b.graph, b.certificate).valid, tag + " verify");
    auto m = oracle::all_pairs(b.graph);
    o.expect(oracle::ladder_holds(m, b.certificate), tag + " oracle");
    if (!b.path_decomposition) {
      o.expect(false, tag + " has no decomposition");
      continue;
    }
    auto r = validate_path_decomposition(b.graph, *b.path_decomposition);
    o.expect(r.valid && r.width <= static_cast<std::size_t>(p + 2), tag + " decomposition");
    std::vector<Vertex> ladder = b.certificate.a;
    ladder.insert(ladder.end(), b.certificate.b.begin(), b.certificate.b.end());
    bool apart = true;
    for (Vertex u : ladder)
      for (Vertex v : ladder)
        if (u != v && m[u][v] != oracle::kFar && m[u][v] < 2 * d) apart = false;
    o.expect(apart, tag + " ladder vertices 2d apart");
  }
  o.summary = "4 parameter pairs";
}

void pairing_algebra(Outcome& o) {
  for (auto [d, k] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    auto x = build_treewidth_pairing(d, k);
    std::string tag = "G(" + str(d) + "," + str(k) + ")";
    auto r = validate_pairing(x.graph, x.dec);
    o.expect(r.valid, tag + " validates: " + r.violation);
    o.expect(x.dec.width() == static_cast<std::size_t>(2 * k + 1), tag + " width");
    o.expect(x.dec.order() == (std::uint64_t{1} << binom(d + k - 2, k - 1)), tag + " order");
    auto m = oracle::all_pairs(x.graph);
    auto& lp = x.dec.leaf_pairs;
    for (std::size_t i = 0; i < lp.size(); ++i)
      for (std::size_t j = 0; j < lp.size(); ++j)
        o.expect(m[lp[i].second][lp[j].first] == (i < j ? 2 * d : 2 * d + 1), tag + " distance matrix");
  }
  o.expect(build_treewidth_pairing(2, 2).dec.order() == 4, "G(2,2) has order 4");
  o.expect(build_treewidth_pairing(3, 2).dec.order() == 8, "G(3,2) has order 8");
  o.summary = "5 pairings, distance matrices checked by Floyd-Warshall";
}

void degree_bound_holds(Outcome& o) {
  auto rng = oracle::seeded_rng(std::cout, "acceptance-degree");
  std::size_t best = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 11;
    Graph g = oracle::bounded_degree(n, 4, 0.3 + 0.1 * (trial % 6), rng);
    std::size_t delta = std::max<std::size_t>(g.max_degree(), 1);
    for (std::uint32_t d : {1u, 2u}) {
      auto ex = max_semi_ladder_exact(g, d);
      std::uint64_t cap = d == 1 ? delta + 1 : delta * delta + 1;
      o.expect(ex.order() <= cap, "order " + str(ex.order()) + " above Delta^d+1 on n=" + str(n));
      o.expect(verify_certificate(g, ex).valid, "exact result verifies");
      best = std::max(best, ex.order());
    }
  }
  o.summary = "200 graphs, n <= 12, max order seen " + str(best);
}

void sunflower_threshold(Outcome& o) {
  auto rng = oracle::seeded_rng(std::cout, "acceptance-sunflower");
  for (auto [a, b, sigma] : {std::tuple{2u, 1u, 1u}, {2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}}) {
    std::size_t size = labeled_sunflower_threshold(a, b, sigma);
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i <= b; ++i) fact *= i;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < b; ++i) power *= a * sigma;
    o.expect(size == a * fact * power, "threshold arithmetic");
    for (int trial = 0; trial < 1000; ++trial) {
      Element universe = 1 + rng() % (3 * b + 2);
      std::vector<LabeledSet> fam(size);
      for (auto& m : fam) {
        std::size_t card = rng() % (b + 1);
        for (std::size_t k = 0; k < card; ++k) m.elements[rng() % universe] = rng() % sigma;
      }
      auto w = find_labeled_sunflower(fam, a, b, sigma);
      o.expect(w && w->order() == a && validate_sunflower(fam, *w).valid,
               "no sunflower at (" + str(a) + "," + str(b) + "," + str(sigma) + ")");
    }
  }
  o.summary = "4000 families";
}

// Randomized greedy semi-ladder on a distance matrix: a_j joins when every earlier b_i reaches it.
LadderCertificate random_semi_ladder(const oracle::Matrix& m, std::uint32_t d, std::size_t want, std::mt19937_64& rng) {
  std::size_t n = m.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  LadderCertificate c{LadderKind::SemiLadder, d, {}, {}};
  std::vector<char> used(n, 0);
  for (Vertex a : order) {
    if (c.order() == want) break;
    if (used[a]) continue;
    bool ok = true;
    for (Vertex b : c.b) ok = ok && oracle::close(m, b, a, d);
    if (!ok) continue;
    std::vector<Vertex> far;
    for (Vertex b = 0; b < n; ++b)
      if (!used[b] && b != a && !oracle::close(m, b, a, d)) far.push_back(b);
    if (far.empty()) continue;
    Vertex b = far[rng() % far.size()];
    used[a] = used[b] = 1;
    c.a.push_back(a);
    c.b.push_back(b);
  }
  return c;
}

void alignment_impossibility(Outcome& o) {
  auto rng = oracle::seeded_rng(std::cout, "acceptance-alignment");
  struct Entry {
    Graph g;
    std::vector<PathDecomposition> pds;
    std::vector<LadderCertificate> pool[3];  // by d
  };
  std::vector<Entry> corpus;
  auto add = [&](Graph g, std::optional<PathDecomposition> pd, std::optional<LadderCertificate> cert) {
    Entry e{std::move(g), {}, {}};
    e.pds.push_back(layer_path_decomposition(e.g));
    if (pd) e.pds.push_back(*pd);
    auto m = oracle::all_pairs(e.g);
    for (std::uint32_t d : {1u, 2u}) {
      std::size_t target = 2 * d + 3;
      auto keep = [&](const LadderCertificate& c) {
        if (c.order() >= target) e.pool[d].push_back(c);
      };
      if (cert && cert->d == d) keep(as_kind(*cert, LadderKind::SemiLadder));
      if (e.g.vertex_count() <= 20) keep(max_semi_ladder_exact(e.g, d));
      keep(greedy_semi_ladder(e.g, d));
      for (int i = 0; i < 40; ++i) keep(random_semi_ladder(m, d, 4 * target, rng));
    }
    corpus.push_back(std::move(e));
  };
  for (int k = 5; k <= 9; ++k) {
    auto b = gen_bounded_degree(k, 1);
    add(b.graph, std::nullopt, b.certificate);
  }
  for (auto [k, h] : {std::pair{3, 2}, {2, 3}, {4, 2}}) add(gen_bounded_degree(k, h).graph, std::nullopt, std::nullopt);
  for (int h = 1; h <= 2; ++h) {
    auto b = gen_planar_even(h);
    add(b.graph, std::nullopt, b.certificate);
  }
  for (auto [p, d, k] : {std::tuple{1, 1, 1}, {2, 1, 0}, {1, 2, 0}}) {
    auto b = gen_pathwidth(p, d, k);
    add(b.graph, b.path_decomposition, std::nullopt);
  }
  add(gen_treewidth(2, 2).graph, std::nullopt, std::nullopt);
  auto cat = oracle::caterpillar();
  add(cat.g, cat.pd, std::nullopt);
  add(grid_graph(5, 5), std::nullopt, std::nullopt);
  for (int i = 0; i < 12; ++i) add(oracle::bounded_degree(10 + rng() % 10, 4, 0.5, rng), std::nullopt, std::nullopt);
  // complements of sparse graphs are dense at distance 1 and give long d = 1 ladders
  for (int i = 0; i < 6; ++i) {
    Graph sparse = oracle::gnp(10 + rng() % 6, 0.2, rng);
    std::vector<Edge> e;
    for (Vertex u = 0; u < sparse.vertex_count(); ++u)
      for (Vertex v = u + 1; v < sparse.vertex_count(); ++v)
        if (!sparse.adjacent(u, v)) e.push_back({u, v});
    add(Graph::from_edges(sparse.vertex_count(), e), std::nullopt, std::nullopt);
  }

  std::size_t pools = 0, aligned = 0, found = 0, tried = 0;
  for (auto& e : corpus) pools += e.pool[1].size() + e.pool[2].size();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::uint32_t d = 1 + attempt % 2;
    std::size_t target = 2 * d + 3;
    auto& e = corpus[rng() % corpus.size()];
    if (e.pool[d].empty()) continue;
    auto& source = e.pool[d][rng() % e.pool[d].size()];
    std::vector<std::size_t> idx(source.order());
    std::iota(idx.begin(), idx.end(), 1);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(target);
    std::sort(idx.begin(), idx.end());
    auto cert = ladder_subset(source, idx);
    cert.d = d;
    ++tried;
    const auto& pd = e.pds[rng() % e.pds.size()];
    Alignment al;
    try {
      al = build_alignment(e.g, pd, cert);
    } catch (const StructuralError&) {
      continue;  // a's not introduced in ladder order
    }
    ++aligned;
    auto sa = extract_sunflower_alignment(e.g, al, target, d);
    if (sa) {
      ++found;
      o.expect(false, "order-" + str(target) + " sunflower alignment found");
    }
    // the natural candidate: core = intersection of the introducing bags
    std::vector<Vertex> core = al.pd.bags[al.t[0]];
    for (auto t : al.t) {
      std::vector<Vertex> keep;
      std::set_intersection(core.begin(), core.end(), al.pd.bags[t].begin(), al.pd.bags[t].end(),
                            std::back_inserter(keep));
      core = keep;
    }
    o.expect(!validate_sunflower_alignment(e.g, {al, core}).valid, "validator accepted an order-" + str(target) + " candidate");
  }

  // near misses: valid small witnesses, each mutated in a way that must break them
  std::vector<std::pair<Graph, SunflowerAlignment>> bases;
  auto cal = build_alignment(cat.g, cat.pd, cat.cert);
  for (std::size_t target = 2; target <= 4; ++target)
    if (auto sa = extract_sunflower_alignment(cat.g, cal, target, 4)) bases.push_back({cat.g, *sa});
  auto pw = gen_pathwidth(2, 1, 0);
  auto pal = build_alignment(pw.graph, *pw.path_decomposition, as_kind(pw.certificate, LadderKind::SemiLadder));
  for (std::size_t target = 2; target <= 3; ++target)
    if (auto sa = extract_sunflower_alignment(pw.graph, pal, target, pw.certificate.d)) bases.push_back({pw.graph, *sa});
  std::size_t rejected = 0, mutants = 0;
  for (auto& [g, sa] : bases) o.expect(validate_sunflower_alignment(g, sa).valid, "base witness validates");
  for (int k = 0; k < 100 && !bases.empty(); ++k) {
    auto& [g, base] = bases[k % bases.size()];
    auto m = base;
    auto& c = m.alignment.certificate;
    switch ((k / bases.size()) % 5) {
      case 0: {  // claim a bag vertex outside the core
        auto& bag = m.alignment.pd.bags[m.alignment.t[rng() % m.order()]];
        std::vector<Vertex> extra;
        for (Vertex v : bag)
          if (!std::binary_search(m.core.begin(), m.core.end(), v)) extra.push_back(v);
        m.core.push_back(extra[rng() % extra.size()]);
        std::sort(m.core.begin(), m.core.end());
        break;
      }
      case 1:  // point a_1 at the wrong bag
        m.alignment.t[0] = m.alignment.t[1];
        break;
      case 2:  // b_1 far no more
        c.b[0] = c.a[0];
        break;
      case 3:  // drop the introducing bag's copy of a_1 from the decomposition
        m.alignment.pd.bags[m.alignment.t[0]].erase(std::find(m.alignment.pd.bags[m.alignment.t[0]].begin(),
                                                              m.alignment.pd.bags[m.alignment.t[0]].end(), c.a[0]));
        break;
      case 4:  // shift d below the ladder's actual distances
        c.d = 1;
        if (c.order() < 2 || base.alignment.certificate.d == 1) c.b[0] = c.a[1];
        break;
    }
    ++mutants;
    bool ok = false;
    try {
      ok = validate_sunflower_alignment(g, m).valid;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++rejected;
    o.expect(!ok, "near miss " + str(k) + " accepted");
  }
  o.expect(mutants == 100, "100 near misses generated");
  o.summary = "10^4 attempts, " + str(pools) + " pooled semi-ladders, " + str(tried) + " candidates, " + str(aligned) +
              " aligned, " + str(found) +
              " found; " + str(rejected) + "/" + str(mutants) + " near misses rejected";
}

void cage_pipeline(Outcome& o) {
  std::string orders;
  for (int k = 5; k <= 11; ++k) {
    auto h = gen_bounded_degree(k, 1);
    auto run = run_cage_pipeline(h.graph, h.certificate);
    std::string tag = "H(" + str(k) + ",1)";
    if (!run.quasi_cage || !run.cage) {
      o.expect(false, tag + " pipeline stopped early");
      continue;
    }
    o.expect(run.quasi_cage->order() + 3 >= static_cast<std::size_t>(k), tag + " quasi-cage order");
    o.expect(validate_quasi_cage(h.graph, *run.quasi_cage).valid, tag + " quasi-cage validates");
    o.expect(run.cage->qc == *run.quasi_cage, tag + " cage intact");
    o.expect(validate_cage(h.graph, *run.cage).valid, tag + " cage validates");
    orders += (orders.empty() ? "" : " ") + str(run.quasi_cage->order());
  }
  auto rng = oracle::seeded_rng(std::cout, "acceptance-cages");
  std::size_t crossings = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t l = 1 + trial % 5;
    auto s = oracle::synthetic_quasi_cage(3 * l, 0.5, rng);
    crossings += s.crossings;
    o.expect(validate_quasi_cage(s.graph, s.qc).valid, "synthetic quasi-cage validates");
    auto cage = extract_cage(s.graph, s.qc);
    o.expect(cage.order() >= l, "cage order below l");
    o.expect(validate_cage(s.graph, cage).valid, "cage validates");
    for (std::size_t i = 0; i < cage.order(); ++i)
      for (std::size_t j = 0; j < cage.order(); ++j)
        if (i != j)
          for (Vertex v : cage.qc.P.paths[i])
            o.expect(std::find(cage.qc.Q.paths[j].begin(), cage.qc.Q.paths[j].end(), v) == cage.qc.Q.paths[j].end(),
                     "P_i meets Q_j");
  }
  o.summary = "quasi-cage orders " + orders + " for k=5..11; 50 synthetic, " + str(crossings) + " crossings";
}

void quasi_wideness(Outcome& o) {
  std::vector<std::pair<std::string, Graph>> graphs{{"grid 10x10", grid_graph(10, 10)},
                                                    {"H(2,4)", gen_bounded_degree(2, 4).graph}};
  std::string sizes;
  for (auto& [name, g] : graphs) {
    auto sigma = degeneracy_order(g);
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    for (std::uint32_t d : {1u, 2u})
      for (std::size_t m : {2u, 3u}) {
        std::string tag = name + " d=" + str(d) + " m=" + str(m);
        auto w = uqw_extract(g, all, d, m, sigma);
        if (!w) {
          o.expect(false, tag + " found nothing");
          continue;
        }
        auto wc = wcol_of_order(g, sigma, d);
        o.expect(w->independent.size() >= m, tag + " too few");
        o.expect(w->deleted.size() <= wc, tag + " deleted above wcol");
        o.expect(validate_uqw(g, *w, &all).valid, tag + " invalid");
        sizes += (sizes.empty() ? "" : ", ") + str(w->deleted.size()) + "/" + str(wc);
      }
  }

  auto path = path_graph(9);
  auto r1 = kt_reduce(path, {}, {0, 5}, 2, 4);
  o.expect(r1.small_core() && validate_uqw(path, std::get<UqwWitness>(r1.branch)).valid, "empty-S gadget");
  auto apex = path_graph(3);
  auto r2 = kt_reduce(apex, {1}, {0, 2}, 1, 4);
  o.expect(r2.small_core() && validate_uqw(apex, std::get<UqwWitness>(r2.branch)).valid, "apex gadget");
  // m = 1, t = 4: five tips joined to three core vertices forces K_{5,3}
  auto f = oracle::fan(5, 3, 2);
  auto r3 = kt_reduce(f.g, f.core, f.tips, 2, 4);
  bool minor = !r3.small_core();
  o.expect(minor, "fan gadget returned a small core");
  if (minor) {
    auto& mm = std::get<MinorModel>(r3.branch);
    o.expect(mm.pattern == complete_bipartite(5, 3), "pattern is K_{5,3}");
    o.expect(validate_minor_model(mm).valid, "minor model validates");
  }
  o.summary = "deleted/wcol " + sizes + "; 3 gadgets";
}

void bounds_table_check(Outcome& o) {
  auto exact = [](const std::optional<BoundValue>& v) { return v && v->is_exact() ? v->decimal() : std::string("?"); };
  auto deg = bound_row(BoundClass::Degree, 4, 3);
  o.expect(exact(deg.upper) == "65", "degree upper");
  o.expect(exact(deg.lower) == "4", "degree lower");
  o.expect(exact(bound_row(BoundClass::Pathwidth, 1, 1).upper) == "2250", "pathwidth upper");
  o.expect(5 * 2 * 15 * 15 == 2250, "2250 arithmetic");
  o.expect(exact(bound_row(BoundClass::Wcol, 4, 2).upper) == "30", "wcol bound");
  o.expect(exact(bound_row(BoundClass::Planar, 0, 5).lower) == "8", "planar lower");
  o.expect(treewidth_lower(2, 3) == 2, "treewidth lower");
  std::size_t rows = 0;
  auto sweep = [&](BoundClass cls, std::int64_t param) {
    for (auto& row : bounds_table(cls, param, 1, 6)) {
      ++rows;
      if (row.lower && row.upper) o.expect(certainly_le(*row.lower, *row.upper), "lower above upper");
    }
  };
  for (int delta = 1; delta <= 8; ++delta) sweep(BoundClass::Degree, delta);
  for (int p = 1; p <= 4; ++p) sweep(BoundClass::Pathwidth, p);
  for (int t : {4, 5, 7}) {
    sweep(BoundClass::Treewidth, t);
    sweep(BoundClass::MinorFree, t);
    sweep(BoundClass::Wcol, t);
  }
  sweep(BoundClass::Planar, 0);
  auto a = render_bounds_text(bounds_table(BoundClass::MinorFree, 7, 1, 6));
  auto b = render_bounds_text(bounds_table(BoundClass::MinorFree, 7, 1, 6));
  o.expect(a == b, "text output byte-stable");
  o.summary = str(rows) + " rows swept";
}

void profiles(Outcome& o) {
  auto rng = oracle::seeded_rng(std::cout, "acceptance-profiles");
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 50;
    Graph g = oracle::gnp(n, 2.5 / static_cast<double>(n), rng);
    std::vector<Vertex> A;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) A.push_back(v);
    if (A.empty()) A.push_back(0);
    std::uint32_t d = 1 + rng() % 3;
    o.expect(profile_count(g, A, d) == oracle::profile_count(g, A, d), "profile count on n=" + str(n));
  }
  std::vector<Graph> hosts{grid_graph(6, 6), grid_graph(4, 9)};
  for (int h = 1; h <= 4; ++h) hosts.push_back(gen_bounded_degree(2, h).graph);
  std::size_t checked = 0;
  for (auto& g : hosts)
    for (std::size_t c = 1; c <= 5; ++c)
      for (std::uint32_t d = 1; d <= 3; ++d)
        for (int rep = 0; rep < 4; ++rep) {
          std::vector<Vertex> all(g.vertex_count());
          std::iota(all.begin(), all.end(), 0);
          std::shuffle(all.begin(), all.end(), rng);
          std::vector<Vertex> A(all.begin(), all.begin() + std::min(c, all.size()));
          auto count = profile_count(g, A, d);
          o.expect(count == oracle::profile_count(g, A, d), "profile count");
          o.expect(mpz_class(count) <= neighborhood_upper(c, d), "profile bound exceeded");
          ++checked;
        }
  o.summary = "100 random graphs; " + str(checked) + " bounded sets on grids and H(2,h)";
}

void oracle_dominance(Outcome& o) {
  auto rng = oracle::seeded_rng(std::cout, "acceptance-dominance");
  std::vector<Graph> corpus;
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& g : oracle::all_graphs(n)) corpus.push_back(g);
  std::size_t exhaustive = corpus.size();
  for (int i = 0; i < 200; ++i) corpus.push_back(oracle::gnp(7 + rng() % 4, 0.2 + 0.1 * (i % 4), rng));
  for (const auto& g : corpus)
    for (std::uint32_t d : {1u, 2u}) {
      auto gr = greedy_semi_ladder(g, d);
      auto ex = max_semi_ladder_exact(g, d);
      o.expect(verify_certificate(g, gr).valid, "greedy result verifies");
      o.expect(gr.order() <= ex.order(), "greedy above exact");
    }
  std::vector<Graph> small;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& g : oracle::all_graphs(n)) small.push_back(g);
  std::size_t wexhaustive = small.size();
  for (int i = 0; i < 60; ++i) small.push_back(oracle::gnp(6 + rng() % 3, 0.35, rng));
  for (const auto& g : small)
    for (std::uint32_t d : {1u, 2u}) {
      auto ex = wcol_exact(g, d);
      o.expect(wcol_of_order(g, degeneracy_order(g), d) >= ex.value, "heuristic below exact");
    }
  o.summary = str(exhaustive) + " exhaustive + 200 random graphs for ladders; " + str(wexhaustive) +
              " exhaustive + 60 random for wcol";
}

}  // namespace

int main() {
  std::cout << "seed " << oracle::harness_seed() << '\n';
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"bounded-degree family", families_bounded_degree},
      {"pathwidth family", families_pathwidth},
      {"pairing algebra", pairing_algebra},
      {"degree upper bound", degree_bound_holds},
      {"labeled sunflower threshold", sunflower_threshold},
      {"sunflower-alignment impossibility", alignment_impossibility},
      {"quasi-cage and cage pipeline", cage_pipeline},
      {"quasi-wideness extraction", quasi_wideness},
      {"bounds table", bounds_table_check},
      {"profile counting", profiles},
      {"oracle dominance", oracle_dominance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.failures == 0;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << criteria[i].first << "  ("
              << o.checks << " checks, " << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.summary.empty()) std::cout << "  " << o.summary;
    if (!pass) std::cout << "  first failure: " << o.first_failure << " [" << o.failures << " total]";
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
