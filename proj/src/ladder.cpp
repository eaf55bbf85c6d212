#include "ladderlab/ladder.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>

#include "ladderlab/errors.hpp"

namespace ladderlab {

std::string to_string(LadderKind k) {
  switch (k) {
    case LadderKind::HalfGraph: return "half_graph";
    case LadderKind::SemiLadder: return "semi_ladder";
    case LadderKind::CoMatching: return "co_matching";
  }
  return "?";
}

std::string to_string(DiagonalConvention c) {
  return c == DiagonalConvention::Strict ? "strict" : "inclusive";
}

LadderKind parse_ladder_kind(const std::string& s) {
  if (s == "half_graph") return LadderKind::HalfGraph;
  if (s == "semi_ladder") return LadderKind::SemiLadder;
  if (s == "co_matching") return LadderKind::CoMatching;
  throw ArgumentError("unknown ladder kind '" + s + "'");
}

DiagonalConvention parse_convention(const std::string& s) {
  if (s == "strict") return DiagonalConvention::Strict;
  if (s == "inclusive") return DiagonalConvention::Inclusive;
  throw ArgumentError("unknown diagonal convention '" + s + "'");
}

std::optional<bool> required_close(const LadderCertificate& c, std::size_t i, std::size_t j) {
  switch (c.kind) {
    case LadderKind::HalfGraph:
      return c.convention == DiagonalConvention::Strict ? i < j : i <= j;
    case LadderKind::SemiLadder:
      if (i < j) return true;
      if (i == j) return false;
      return std::nullopt;
    case LadderKind::CoMatching:
      return i != j;
  }
  return std::nullopt;
}

void check_distinct(const LadderCertificate& c) {
  if (c.a.size() != c.b.size()) throw StructuralError("a and b sequences differ in length");
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    if (!seen.insert(c.a[i]).second)
      throw StructuralError("vertex " + std::to_string(c.a[i]) + " repeated in certificate");
    if (!seen.insert(c.b[i]).second)
      throw StructuralError("vertex " + std::to_string(c.b[i]) + " repeated in certificate");
  }
}

namespace {

LadderReport check_pattern(const Graph& g, const LadderCertificate& c, unsigned threads) {
  if (c.d == 0) throw ArgumentError("distance parameter must be positive");
  if (c.a.size() != c.b.size()) throw StructuralError("a and b sequences differ in length");
  for (Vertex v : c.a) g.check_vertex(v);
  for (Vertex v : c.b) g.check_vertex(v);
  auto rows = distances_from_many(g, c.b, threads);
  std::size_t l = c.order();
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t j = 1; j <= l; ++j) {
      auto need = required_close(c, i, j);
      if (!need) continue;
      const auto& row = rows[i - 1];
      Vertex aj = c.a[j - 1];
      if (row.within(aj, c.d) != *need) return {false, LadderViolation{i, j, row.get(aj), *need}};
    }
  }
  return {};
}

}  // namespace

LadderReport verify_certificate(const Graph& g, const LadderCertificate& c, unsigned threads) {
  check_distinct(c);
  return check_pattern(g, c, threads);
}

LadderCertificate ladder_subset(const LadderCertificate& c, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw ArgumentError("subset must keep at least one index");
  LadderCertificate out = c;
  out.a.clear();
  out.b.clear();
  for (std::size_t k = 0; k < indices.size(); ++k) {
    std::size_t i = indices[k];
    if (i < 1 || i > c.order()) throw ArgumentError("subset index " + std::to_string(i) + " out of range");
    if (k > 0 && indices[k - 1] >= i) throw ArgumentError("subset indices must be strictly ascending");
    out.a.push_back(c.a[i - 1]);
    out.b.push_back(c.b[i - 1]);
  }
  return out;
}

LadderCertificate as_kind(LadderCertificate c, LadderKind kind) {
  c.kind = kind;
  if (kind != LadderKind::HalfGraph) c.convention = DiagonalConvention::Strict;
  return c;
}

LadderCertificate dedup_half_graph(const Graph& g, const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b, std::uint32_t d,
                                   DiagonalConvention convention) {
  LadderCertificate c{LadderKind::HalfGraph, d, a, b, convention};
  if (c.empty()) throw ArgumentError("dedup needs a non-empty input");
  auto report = check_pattern(g, c, 1);
  if (!report.valid) {
    auto& v = *report.violation;
    throw StructuralError("input violates the half-graph pattern at (" + std::to_string(v.i) + "," +
                          std::to_string(v.j) + ")");
  }
  // The pattern forces the a's (and the b's) to be pairwise distinct, so the only
  // collisions are a_i = b_j, and each index meets at most two of them: the conflict
  // graph is a union of paths. Keeping the larger colour class of each path keeps
  // at least half the indices.
  std::size_t l = c.order();
  std::map<Vertex, std::size_t> b_index;
  for (std::size_t j = 0; j < l; ++j) b_index[b[j]] = j;
  std::vector<std::vector<std::size_t>> adj(l);
  std::vector<char> forced_out(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    auto it = b_index.find(a[i]);
    if (it == b_index.end()) continue;
    if (it->second == i) {
      forced_out[i] = 1;
      continue;
    }
    adj[i].push_back(it->second);
    adj[it->second].push_back(i);
  }
  std::vector<int> colour(l, -1);
  std::vector<std::size_t> keep;
  for (std::size_t s = 0; s < l; ++s) {
    if (colour[s] >= 0 || forced_out[s]) continue;
    std::vector<std::size_t> comp{s}, cls[2];
    colour[s] = 0;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      std::size_t u = comp[h];
      cls[colour[u]].push_back(u);
      for (std::size_t w : adj[u]) {
        if (colour[w] >= 0 || forced_out[w]) continue;
        colour[w] = 1 - colour[u];
        comp.push_back(w);
      }
    }
    auto& best = cls[1].size() > cls[0].size() ? cls[1] : cls[0];
    keep.insert(keep.end(), best.begin(), best.end());
  }
  std::sort(keep.begin(), keep.end());
  if (keep.empty()) throw StructuralError("every index collides with itself");
  for (auto& k : keep) ++k;
  auto out = ladder_subset(c, keep);
  check_distinct(out);
  return out;
}

std::size_t exhaustive_guard(std::size_t fallback) {
  if (const char* env = std::getenv("LADDERLAB_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

namespace {

struct ExactSearch {
  std::size_t n;
  std::uint32_t d;
  std::size_t cap;
  std::vector<std::uint64_t> close;  // close[v]: vertices within distance d of v (v itself included)
  std::vector<Vertex> a, b;
  std::vector<Vertex> best_a, best_b;

  void run(std::uint64_t used, std::uint64_t a_cand) {
    if (best_a.size() >= cap) return;
    std::uint64_t avail_a = a_cand & ~used;
    // Each further pair needs a fresh a from avail_a and two unused vertices.
    std::size_t free_vertices = n - static_cast<std::size_t>(std::popcount(used));
    std::size_t bound = a.size() + std::min<std::size_t>(std::popcount(avail_a), free_vertices / 2);
    if (bound <= best_a.size()) return;
    std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (std::uint64_t am = avail_a; am; am &= am - 1) {
      Vertex av = static_cast<Vertex>(std::countr_zero(am));
      std::uint64_t partners = all & ~close[av] & ~used;
      for (std::uint64_t bm = partners; bm; bm &= bm - 1) {
        Vertex bv = static_cast<Vertex>(std::countr_zero(bm));
        a.push_back(av);
        b.push_back(bv);
        if (a.size() > best_a.size()) {
          best_a = a;
          best_b = b;
        }
        run(used | (1ULL << av) | (1ULL << bv), a_cand & close[bv]);
        a.pop_back();
        b.pop_back();
        if (best_a.size() >= cap) return;
        if (a.size() + std::min<std::size_t>(std::popcount(avail_a), free_vertices / 2) <= best_a.size())
          return;
      }
    }
  }
};

}  // namespace

LadderCertificate max_semi_ladder_exact(const Graph& g, std::uint32_t d, std::size_t cap) {
  if (d == 0) throw ArgumentError("distance parameter must be positive");
  if (cap == 0) throw ArgumentError("cap must be positive");
  std::size_t guard = exhaustive_guard(24);
  std::size_t n = g.vertex_count();
  if (n > guard || n > 64)
    throw SizeError("exact semi-ladder search limited to " + std::to_string(std::min<std::size_t>(guard, 64)) +
                    " vertices, graph has " + std::to_string(n));
  ExactSearch s{n, d, cap, std::vector<std::uint64_t>(n, 0), {}, {}, {}, {}};
  for (Vertex v = 0; v < n; ++v) {
    auto dist = distances_bounded(g, v, d);
    for (Vertex w = 0; w < n; ++w)
      if (dist.reachable(w)) s.close[v] |= 1ULL << w;
  }
  std::uint64_t all = n == 64 ? ~0ULL : (n == 0 ? 0 : ((1ULL << n) - 1));
  s.run(0, all);
  return {LadderKind::SemiLadder, d, s.best_a, s.best_b, DiagonalConvention::Strict};
}

LadderCertificate greedy_semi_ladder(const Graph& g, std::uint32_t d) {
  if (d == 0) throw ArgumentError("distance parameter must be positive");
  std::size_t n = g.vertex_count();
  LadderCertificate c{LadderKind::SemiLadder, d, {}, {}, DiagonalConvention::Strict};
  std::vector<char> used(n, 0);
  std::vector<DistanceVector> b_rows;
  for (Vertex av = 0; av < n; ++av) {
    if (used[av]) continue;
    bool fits = std::all_of(b_rows.begin(), b_rows.end(), [&](auto& r) { return r.within(av, d); });
    if (!fits) continue;
    auto from_a = distances_bounded(g, av, d);
    for (Vertex bv = 0; bv < n; ++bv) {
      if (bv == av || used[bv] || from_a.within(bv, d)) continue;
      c.a.push_back(av);
      c.b.push_back(bv);
      used[av] = used[bv] = 1;
      b_rows.push_back(distances_bounded(g, bv, d));
      break;
    }
  }
  return c;
}

}  // namespace ladderlab
