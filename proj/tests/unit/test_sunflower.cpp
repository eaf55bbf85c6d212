#include <doctest.h>

#include <set>

#include "ladderlab/errors.hpp"
#include "ladderlab/generators.hpp"
#include "ladderlab/sunflower.hpp"
#include "oracles.hpp"

using namespace ladderlab;

namespace {

LabeledSet set_of(std::initializer_list<std::pair<const Element, Label>> xs) { return LabeledSet{xs}; }

}  // namespace

TEST_CASE("plain sunflowers") {
  std::vector<LabeledSet> disjoint{set_of({{1, 0}}), set_of({{2, 0}}), set_of({{3, 0}})};
  auto w = find_labeled_sunflower(disjoint, 3, 1, 1);
  REQUIRE(w);
  CHECK(w->core.empty());
  CHECK(w->order() == 3);
  CHECK(validate_sunflower(disjoint, *w).valid);

  // {x},{x},{y},{z} at a=2, b=1: exactly at the threshold 2 * 1! * 2^1 = 4
  CHECK(labeled_sunflower_threshold(2, 1, 1) == 4);
  std::vector<LabeledSet> singles{set_of({{7, 0}}), set_of({{7, 0}}), set_of({{8, 0}}), set_of({{9, 0}})};
  auto s = find_labeled_sunflower(singles, 2, 1, 1);
  REQUIRE(s);
  CHECK(s->order() == 2);
  CHECK(validate_sunflower(singles, *s).valid);
  bool both_x = s->members == std::vector<std::size_t>{0, 1} && s->core == std::vector<Element>{7};
  CHECK((both_x || s->core.empty()));

  CHECK_THROWS_AS(find_labeled_sunflower(singles, 2, 0, 1), ArgumentError);
}

TEST_CASE("label consistency on the core") {
  std::vector<LabeledSet> fam{set_of({{5, 0}}), set_of({{5, 1}})};
  SunflowerWitness w{{0, 1}, {5}, {{5, 0}}};
  auto r = validate_sunflower(fam, w);
  CHECK_FALSE(r.valid);
  auto found = find_labeled_sunflower(fam, 2, 1, 2);
  if (found) CHECK(validate_sunflower(fam, *found).valid);
}

TEST_CASE("intersection clause is checked on every pair") {
  std::vector<LabeledSet> fam{set_of({{1, 0}, {2, 0}}), set_of({{1, 0}, {3, 0}}), set_of({{1, 0}, {3, 0}})};
  SunflowerWitness w{{0, 1, 2}, {1}, {{1, 0}}};
  CHECK_FALSE(validate_sunflower(fam, w).valid);
}

TEST_CASE("threshold guarantee on random families") {
  auto rng = oracle::seeded_rng(std::cout, "sunflower-threshold");
  for (auto [a, b, sigma] : {std::tuple{2u, 1u, 1u}, {2u, 1u, 2u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {3u, 2u, 1u}}) {
    std::size_t size = labeled_sunflower_threshold(a, b, sigma);
    for (int trial = 0; trial < 200; ++trial) {
      // a small universe forces heavy overlap, which is where the recursion matters
      Element universe = 1 + rng() % (2 * b + 2);
      std::vector<LabeledSet> fam(size);
      for (auto& m : fam) {
        std::size_t card = rng() % (b + 1);
        for (std::size_t k = 0; k < card; ++k) m.elements[rng() % universe] = rng() % sigma;
      }
      auto w = find_labeled_sunflower(fam, a, b, sigma);
      REQUIRE(w);
      CHECK(w->order() == a);
      CHECK(validate_sunflower(fam, *w).valid);
    }
  }
}

TEST_CASE("alignments on generated bundles") {
  auto b = gen_pathwidth(1, 1, 0);
  auto al = build_alignment(b.graph, *b.path_decomposition, as_kind(b.certificate, LadderKind::SemiLadder));
  CHECK(al.order() == 3);
  std::set<std::size_t> ts(al.t.begin(), al.t.end());
  CHECK(ts.size() == 3);
  CHECK(is_nice(al.pd));
  CHECK(validate_alignment(b.graph, al).valid);

  auto one = ladder_subset(as_kind(b.certificate, LadderKind::SemiLadder), {2});
  auto al1 = build_alignment(b.graph, *b.path_decomposition, one);
  CHECK(al1.order() == 1);

  auto broken = as_kind(b.certificate, LadderKind::SemiLadder);
  std::swap(broken.a[0], broken.a[1]);
  CHECK_THROWS_AS(build_alignment(b.graph, *b.path_decomposition, broken), StructuralError);
}

TEST_CASE("sunflower alignment with a shared core") {
  auto c = oracle::caterpillar();
  REQUIRE(validate_path_decomposition(c.g, c.pd).valid);
  REQUIRE(verify_certificate(c.g, c.cert).valid);
  auto al = build_alignment(c.g, c.pd, c.cert);
  REQUIRE(validate_alignment(c.g, al).valid);

  auto sa = extract_sunflower_alignment(c.g, al, 4, 4);
  REQUIRE(sa);
  CHECK(sa->order() == 4);
  CHECK(sa->core == std::vector<Vertex>{std::min(c.x, c.y), std::max(c.x, c.y)});
  CHECK(validate_sunflower_alignment(c.g, *sa).valid);

  // claim an extra core vertex that lives in only one of the bags
  auto bad = *sa;
  Vertex extra = *std::find_if(bad.alignment.pd.bags[bad.alignment.t[0]].begin(),
                               bad.alignment.pd.bags[bad.alignment.t[0]].end(),
                               [&](Vertex v) { return v != c.x && v != c.y; });
  bad.core.push_back(extra);
  std::sort(bad.core.begin(), bad.core.end());
  auto rep = validate_sunflower_alignment(c.g, bad);
  CHECK_FALSE(rep.valid);
  CHECK(rep.violation.find("intersection") != std::string::npos);

  // x now sits at distance 1 from a_1, a_2 only
  auto w = oracle::caterpillar(true);
  REQUIRE(verify_certificate(w.g, w.cert).valid);
  auto alw = build_alignment(w.g, w.pd, w.cert);
  for (std::size_t target = 1; target <= 6; ++target) {
    auto r = extract_sunflower_alignment(w.g, alw, target, 4);
    if (!r) continue;
    CHECK(r->order() == target);
    CHECK(validate_sunflower_alignment(w.g, *r).valid);
  }
}

TEST_CASE("empty-core alignments") {
  auto b = gen_pathwidth(2, 1, 0);
  auto al = build_alignment(b.graph, *b.path_decomposition, as_kind(b.certificate, LadderKind::SemiLadder));
  auto sa = extract_sunflower_alignment(b.graph, al, 2, b.certificate.d);
  REQUIRE(sa);
  CHECK(validate_sunflower_alignment(b.graph, *sa).valid);
  CHECK_THROWS_AS(extract_sunflower_alignment(b.graph, al, 2, b.certificate.d + 1), ArgumentError);
}

TEST_CASE("alignment threshold arithmetic") {
  CHECK(sunflower_alignment_threshold(5, 1, 1) == 2250);
  CHECK(sunflower_alignment_threshold(2, 0, 1) == 2 * 1 * 6);
}
