#include <doctest.h>

#include "ladderlab/bounds.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/generators.hpp"
#include "ladderlab/json_io.hpp"
#include "oracles.hpp"

using namespace ladderlab;

namespace {

// Plain unsigned arithmetic, kept to ranges where nothing overflows.
std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t fact(std::uint64_t n) { return n <= 1 ? 1 : n * fact(n - 1); }

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string exact(const std::optional<BoundValue>& v) {
  REQUIRE(v);
  REQUIRE(v->is_exact());
  return v->decimal();
}

}  // namespace

TEST_CASE("headline values") {
  auto deg = bound_row(BoundClass::Degree, 4, 3);
  CHECK(exact(deg.upper) == "65");
  CHECK(exact(deg.lower) == "4");
  CHECK(exact(bound_row(BoundClass::Pathwidth, 1, 1).upper) == "2250");
  CHECK(exact(bound_row(BoundClass::Wcol, 4, 2).upper) == "30");
  CHECK(exact(bound_row(BoundClass::Planar, 0, 5).lower) == "8");
  CHECK(treewidth_lower(2, 3) == 2);
}

TEST_CASE("formulas against direct arithmetic") {
  for (std::uint64_t delta = 1; delta <= 8; ++delta)
    for (std::uint32_t d = 1; d <= 6; ++d) {
      CHECK(degree_upper(delta, d) == ipow(delta, d) + 1);
      CHECK(degree_lower(delta, d) == ipow(delta / 2, (d + 1) / 2));
    }
  for (std::uint64_t p = 1; p <= 4; ++p)
    for (std::uint32_t d = 1; d <= 4; ++d)
      CHECK(pathwidth_upper(p, d) == (2 * d + 3) * fact(p + 1) * ipow((2 * d + 3) * (d + 2), p + 1));
  for (std::uint32_t t = 4; t <= 7; ++t)
    for (std::uint32_t d = 1; d <= 6; ++d) CHECK(wcol_bound(d, t) == choose(d + t - 2, t - 2) * (t - 3) * (2 * d + 1));
  for (std::uint64_t c = 1; c <= 5; ++c)
    for (std::uint32_t d = 1; d <= 3; ++d) CHECK(neighborhood_upper(c, d) == 64 * c * c * c * ipow(d + 2, 7));
  for (std::uint32_t d = 2; d <= 8; d += 2)
    for (std::uint32_t t = 3; t <= 7; t += 2)
      CHECK(treewidth_lower(d, t) == ipow(2, choose((d + t - 5) / 2, (t - 3) / 2)));
  for (std::uint32_t d = 1; d <= 6; ++d) CHECK(planar_lower(d) == ipow(2, (d + 1) / 2));
  CHECK(uqw_margin(2, 3).decimal() == "128");  // 2! * 4^3
}

TEST_CASE("lower never exceeds upper across the sweep") {
  std::size_t rows = 0;
  auto check_all = [&](BoundClass cls, std::int64_t param) {
    for (auto& row : bounds_table(cls, param, 1, 6)) {
      ++rows;
      if (row.lower && row.upper) CHECK(certainly_le(*row.lower, *row.upper));
    }
  };
  for (int delta = 1; delta <= 8; ++delta) check_all(BoundClass::Degree, delta);
  for (int p = 1; p <= 4; ++p) check_all(BoundClass::Pathwidth, p);
  for (int t : {4, 5, 7}) {
    check_all(BoundClass::Treewidth, t);
    check_all(BoundClass::MinorFree, t);
    check_all(BoundClass::Wcol, t);
  }
  check_all(BoundClass::Planar, 0);
  CHECK(rows > 100);
}

TEST_CASE("parameter adjustments are recorded") {
  auto even = bound_row(BoundClass::Degree, 4, 4);
  CHECK(exact(even.lower) == "4");
  REQUIRE_FALSE(even.notes.empty());
  CHECK(even.notes[0].find("d=3") != std::string::npos);
  CHECK(bound_row(BoundClass::Degree, 4, 3).notes.empty());
  CHECK_THROWS_AS(bound_row(BoundClass::Wcol, 3, 2), ArgumentError);
}

TEST_CASE("huge values stay certified rather than materialized") {
  auto row = bound_row(BoundClass::MinorFree, 7, 6);
  REQUIRE(row.upper);
  CHECK_FALSE(row.upper->is_exact());
  CHECK(row.upper->log2_at_least > kExactBitCap);
  CHECK(row.upper->render().rfind(">= 2^", 0) == 0);
  REQUIRE(row.lower);
  CHECK(certainly_le(*row.lower, *row.upper));
}

TEST_CASE("rendering is byte-stable") {
  auto a = bounds_table(BoundClass::Treewidth, 5, 1, 6);
  auto b = bounds_table(BoundClass::Treewidth, 5, 1, 6);
  CHECK(render_bounds_text(a) == render_bounds_text(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string once = dump_canonical(bound_row_to_json(a[i]));
    CHECK(once == dump_canonical(bound_row_to_json(b[i])));
    CHECK(dump_canonical(parse_json(once)) == once);
  }
  auto big = BoundValue::of(mpz_class("123456789012345678901234567890"));
  CHECK(big.render(40) == "123456789012345678901234567890");
  CHECK(big.render(10) == "123...890 (30 digits)");
}

TEST_CASE("generated witnesses and exact maxima respect the table") {
  for (auto [k, h] : {std::pair{2, 1}, {2, 2}, {3, 2}, {2, 3}, {4, 1}}) {
    auto b = gen_bounded_degree(k, h);
    auto row = bound_row(BoundClass::Degree, static_cast<std::int64_t>(b.graph.max_degree()), b.certificate.d);
    CHECK(mpz_class(b.certificate.order()) >= row.lower->exact.value());
    CHECK(mpz_class(b.certificate.order()) <= row.upper->exact.value());
  }
  for (int h = 1; h <= 3; ++h) {
    auto b = gen_planar_even(h);
    auto row = bound_row(BoundClass::Planar, 0, b.certificate.d);
    CHECK(mpz_class(b.certificate.order()) >= row.lower->exact.value());
  }
  for (auto [p, d] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    auto b = gen_pathwidth(p, d, 0);
    auto row = bound_row(BoundClass::Pathwidth, p + 2, b.certificate.d);
    CHECK(mpz_class(b.certificate.order()) >= row.lower->exact.value());
    CHECK(certainly_le(BoundValue::of(b.certificate.order()), *row.upper));
  }
  auto rng = oracle::seeded_rng(std::cout, "bounds-degree");
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::bounded_degree(8, 3, 0.5, rng);
    for (std::uint32_t d : {1u, 2u}) {
      auto ex = max_semi_ladder_exact(g, d);
      auto delta = std::max<std::size_t>(g.max_degree(), 1);
      CHECK(mpz_class(ex.order()) <= degree_upper(delta, d));
    }
  }
}
