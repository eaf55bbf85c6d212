#include "ladderlab/cages.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

LadderCertificate as_semi_ladder(const Graph& g, const LadderCertificate& cert) {
  auto c = as_kind(cert, LadderKind::SemiLadder);
  c.convention = DiagonalConvention::Strict;
  auto rep = verify_certificate(g, c);
  if (!rep.valid) throw ArgumentError("input is not a distance-d semi-ladder");
  return c;
}

// Largest class of a key function over the candidates; ties go to the smaller key.
std::vector<std::size_t> largest_class(const std::vector<std::pair<std::uint32_t, std::size_t>>& keyed) {
  std::map<std::uint32_t, std::vector<std::size_t>> classes;
  for (auto [k, i] : keyed) classes[k].push_back(i);
  const std::vector<std::size_t>* best = nullptr;
  for (auto& [k, members] : classes)
    if (!best || members.size() > best->size()) best = &members;
  return best ? *best : std::vector<std::size_t>{};
}

GeodesicTree tree_subset(const GeodesicTree& t, const std::vector<std::size_t>& indices) {
  GeodesicTree out{t.root, {}, t.simple};
  for (auto i : indices) out.paths.push_back(t.paths.at(i - 1));
  return out;
}

bool on_path(const std::vector<Vertex>& path, Vertex v) { return std::find(path.begin(), path.end(), v) != path.end(); }

bool paths_meet(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  for (Vertex v : x)
    if (on_path(y, v)) return true;
  return false;
}

bool meets_only_at_root(const std::vector<std::vector<Vertex>>& paths) {
  std::set<Vertex> seen;
  for (const auto& path : paths)
    for (std::size_t k = 1; k < path.size(); ++k)
      if (!seen.insert(path[k]).second) return false;
  return true;
}

void check_indices(std::size_t order, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw ArgumentError("index selection is empty");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1 || indices[k] > order) throw ArgumentError("index out of range");
    if (k && indices[k] <= indices[k - 1]) throw ArgumentError("indices must be strictly ascending");
  }
}

}  // namespace

REquidistant extract_r_equidistant(const Graph& g, const LadderCertificate& cert_in) {
  if (cert_in.order() < 2) throw ArgumentError("R-equidistant extraction needs order >= 2");
  auto cert = as_semi_ladder(g, cert_in);
  Vertex r = cert.b[0];
  auto dist = distances_from(g, r);
  std::vector<std::pair<std::uint32_t, std::size_t>> keyed;
  for (std::size_t i = 2; i <= cert.order(); ++i) {
    auto x = dist.get(cert.a[i - 1]);
    if (!x || *x == 0 || *x > cert.d) throw InternalError("semi-ladder row 1 is not within distance d");
    keyed.emplace_back(*x, i);
  }
  auto kept = largest_class(keyed);
  return {ladder_subset(cert, kept), r, kept};
}

SimpleGeodesic extract_simple_geodesic(const Graph& g, const REquidistant& in) {
  const auto& cert = in.certificate;
  if (cert.order() == 0) throw ArgumentError("empty R-equidistant semi-ladder");
  auto parents = bfs_parents(g, in.r);
  std::vector<std::vector<Vertex>> full;
  std::map<Vertex, std::set<Vertex>> children;
  for (Vertex a : cert.a) {
    auto path = tree_path(parents, a);
    if (path.empty()) throw ArgumentError("terminal unreachable from r");
    if (!full.empty() && path.size() != full[0].size()) throw ArgumentError("terminals are not equidistant from r");
    for (std::size_t k = 0; k + 1 < path.size(); ++k) children[path[k]].insert(path[k + 1]);
    full.push_back(std::move(path));
  }
  Vertex p = full[0][0];
  std::size_t best = 0;
  for (auto& [v, ch] : children)
    if (ch.size() > best) {
      best = ch.size();
      p = v;
    }
  // one smallest-index terminal per child of p
  std::map<Vertex, std::size_t> pick;
  for (std::size_t i = 0; i < full.size(); ++i) {
    auto it = std::find(full[i].begin(), full[i].end(), p);
    if (it == full[i].end()) continue;
    pick.emplace(*(it + 1), i + 1);
  }
  std::vector<std::size_t> kept;
  for (auto& [c, i] : pick) kept.push_back(i);
  std::sort(kept.begin(), kept.end());
  GeodesicTree tree{p, {}, true};
  for (auto i : kept) {
    auto& path = full[i - 1];
    tree.paths.emplace_back(std::find(path.begin(), path.end(), p), path.end());
  }
  return {ladder_subset(cert, kept), std::move(tree), kept};
}

std::optional<QEquidistant> extract_q_equidistant(const Graph& g, const SimpleGeodesic& in) {
  const auto& cert = in.certificate;
  if (cert.order() < 2) throw ArgumentError("Q-equidistant extraction needs order >= 2");
  Vertex q = cert.b[0];
  auto dist = distances_from(g, q);
  std::vector<std::pair<std::uint32_t, std::size_t>> keyed;
  for (std::size_t i = 2; i <= cert.order(); ++i) {
    if (on_path(in.tree.paths[i - 1], q)) continue;
    auto x = dist.get(cert.a[i - 1]);
    if (!x || *x == 0 || *x > cert.d) throw InternalError("semi-ladder row 1 is not within distance d");
    keyed.emplace_back(*x, i);
  }
  auto kept = largest_class(keyed);
  if (kept.empty()) return std::nullopt;
  auto to_root = dist.get(in.tree.root);
  std::size_t depth = in.tree.paths[0].size() - 1;
  if (!to_root || *to_root + depth <= cert.d) return std::nullopt;
  return QEquidistant{ladder_subset(cert, kept), tree_subset(in.tree, kept), q, kept};
}

QuasiCage assemble_quasi_cage(const Graph& g, const QEquidistant& in) {
  auto parents = bfs_parents(g, in.q);
  GeodesicTree Q{in.q, {}, false};
  for (Vertex a : in.certificate.a) Q.paths.push_back(tree_path(parents, a));
  Q.simple = meets_only_at_root(Q.paths);
  QuasiCage qc{in.certificate, in.tree.root, in.q, in.tree, std::move(Q)};
  auto rep = validate_quasi_cage(g, qc);
  if (!rep.valid) throw InternalError("assembled quasi-cage is invalid: " + rep.violation);
  return qc;
}

Cage extract_cage(const Graph& g, const QuasiCage& qc) {
  auto rep = validate_quasi_cage(g, qc);
  if (!rep.valid) throw ArgumentError("input quasi-cage is invalid: " + rep.violation);
  std::size_t n = qc.order();
  std::uint32_t d = qc.certificate.d;
  std::vector<std::set<std::size_t>> adj(n);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && paths_meet(qc.P.paths[i], qc.Q.paths[j])) {
        ++indeg[j];
        adj[i].insert(j);
        adj[j].insert(i);
      }
  for (std::size_t j = 0; j < n; ++j)
    if (indeg[j] + 1 > d) throw InternalError("Q-path meets more than d-1 foreign P-paths");

  // removal order: repeatedly the minimum-degree index (smallest on ties); colour in reverse
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < n; ++i) queue.emplace(deg[i] = adj[i].size(), i);
  std::vector<char> gone(n, 0);
  std::vector<std::size_t> removal;
  while (!queue.empty()) {
    auto [dv, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    removal.push_back(v);
    for (auto w : adj[v])
      if (!gone[w]) {
        queue.erase({deg[w], w});
        queue.emplace(--deg[w], w);
      }
  }
  std::vector<std::size_t> colour(n, SIZE_MAX);
  std::size_t colours = 0;
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
    std::set<std::size_t> used;
    for (auto w : adj[*it])
      if (colour[w] != SIZE_MAX) used.insert(colour[w]);
    std::size_t c = 0;
    while (used.count(c)) ++c;
    colour[*it] = c;
    colours = std::max(colours, c + 1);
  }
  if (colours > 2 * std::size_t{d} - 1) throw InternalError("auxiliary graph needed more than 2d-1 colours");
  std::vector<std::size_t> size(colours, 0);
  for (auto c : colour) ++size[c];
  std::size_t pick = 0;
  for (std::size_t c = 1; c < colours; ++c)
    if (size[c] > size[pick]) pick = c;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (colour[i] == pick) kept.push_back(i + 1);
  Cage cage{quasi_cage_subset(qc, kept)};
  auto crep = validate_cage(g, cage);
  if (!crep.valid) throw InternalError("extracted cage is invalid: " + crep.violation);
  return cage;
}

CagePipeline run_cage_pipeline(const Graph& g, const LadderCertificate& cert) {
  CagePipeline out;
  out.stage_orders.push_back(cert.order());
  if (cert.order() < 2) return out;
  auto r = extract_r_equidistant(g, cert);
  out.stage_orders.push_back(r.certificate.order());
  if (r.certificate.order() == 0) return out;
  auto sg = extract_simple_geodesic(g, r);
  out.stage_orders.push_back(sg.certificate.order());
  if (sg.certificate.order() < 2) return out;
  auto qe = extract_q_equidistant(g, sg);
  if (!qe) return out;
  out.stage_orders.push_back(qe->certificate.order());
  out.quasi_cage = assemble_quasi_cage(g, *qe);
  out.cage = extract_cage(g, *out.quasi_cage);
  return out;
}

std::uint64_t quasi_cage_threshold(std::uint32_t d, std::uint64_t l) {
  auto mul = [](std::uint64_t x, std::uint64_t y) {
    return (y && x > UINT64_MAX / y) ? UINT64_MAX : x * y;
  };
  std::uint64_t base = mul(d, l);
  base = base > UINT64_MAX - 2 ? UINT64_MAX : base + 2;
  std::uint64_t acc = 1;
  for (std::uint32_t k = 0; k < d; ++k) acc = mul(acc, base);
  acc = mul(acc, d);
  return acc == UINT64_MAX ? acc : acc + 1;
}

CageReport validate_geodesic_tree(const Graph& g, const GeodesicTree& t, std::uint32_t d) {
  auto bad = [](std::string why) { return CageReport{false, std::move(why)}; };
  if (t.root >= g.vertex_count()) return bad("root out of range");
  auto dist = distances_from(g, t.root);
  std::map<Vertex, Vertex> parent;
  std::set<Vertex> terminals;
  std::size_t length = SIZE_MAX;
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    const auto& path = t.paths[i];
    std::string name = "path " + std::to_string(i + 1);
    if (path.empty() || path[0] != t.root) return bad(name + " does not start at the root");
    for (Vertex v : path)
      if (v >= g.vertex_count()) return bad(name + " has an out-of-range vertex");
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      if (!g.adjacent(path[k], path[k + 1])) return bad(name + " uses a non-edge");
    std::size_t len = path.size() - 1;
    if (!dist.get(path.back()) || *dist.get(path.back()) != len) return bad(name + " is not a shortest path");
    if (length == SIZE_MAX) length = len;
    if (len != length) return bad(name + " has a different length");
    if (len > d) return bad(name + " is longer than d");
    if (!terminals.insert(path.back()).second) return bad(name + " repeats a terminal");
    for (std::size_t k = 1; k < path.size(); ++k) {
      auto [it, fresh] = parent.emplace(path[k], path[k - 1]);
      if (!fresh && it->second != path[k - 1]) return bad("union of paths is not a tree");
    }
  }
  for (auto& [v, par] : parent)
    if (terminals.count(par)) return bad("terminal " + std::to_string(par) + " is not a leaf");
  if (t.simple && !meets_only_at_root(t.paths)) return bad("simplicity: two paths share a non-root vertex");
  return {};
}

CageReport validate_quasi_cage(const Graph& g, const QuasiCage& qc) {
  auto bad = [](std::string why) { return CageReport{false, std::move(why)}; };
  const auto& c = qc.certificate;
  if (c.kind != LadderKind::SemiLadder) return bad("certificate is not a semi-ladder");
  try {
    if (!verify_certificate(g, c).valid) return bad("certificate is not a valid semi-ladder");
  } catch (const StructuralError& e) {
    return bad(std::string("certificate: ") + e.what());
  } catch (const ArgumentError& e) {
    return bad(std::string("certificate: ") + e.what());
  }
  if (qc.p >= g.vertex_count() || qc.q >= g.vertex_count()) return bad("root out of range");
  if (qc.p == qc.q) return bad("p and q coincide");
  for (auto side : {&c.a, &c.b})
    for (Vertex v : *side)
      if (v == qc.p || v == qc.q) return bad("a root is a ladder vertex");
  if (qc.P.order() != c.order() || qc.Q.order() != c.order()) return bad("tree order differs from ladder order");
  if (qc.P.root != qc.p || qc.Q.root != qc.q) return bad("tree roots differ from p, q");
  if (!qc.P.simple) return bad("tree P is not marked simple");
  if (auto r = validate_geodesic_tree(g, qc.P, c.d); !r.valid) return bad("tree P: " + r.violation);
  if (auto r = validate_geodesic_tree(g, qc.Q, c.d); !r.valid) return bad("tree Q: " + r.violation);
  for (std::size_t i = 0; i < c.order(); ++i) {
    if (qc.P.paths[i].back() != c.a[i] || qc.Q.paths[i].back() != c.a[i])
      return bad("path " + std::to_string(i + 1) + " does not end at a_" + std::to_string(i + 1));
    if (on_path(qc.P.paths[i], qc.q)) return bad("avoidance: P passes through q");
    if (on_path(qc.Q.paths[i], qc.p)) return bad("avoidance: Q passes through p");
  }
  return {};
}

CageReport validate_cage(const Graph& g, const Cage& cage) {
  auto rep = validate_quasi_cage(g, cage.qc);
  if (!rep.valid) return rep;
  const auto& qc = cage.qc;
  for (std::size_t i = 0; i < qc.order(); ++i)
    for (std::size_t j = 0; j < qc.order(); ++j)
      if (i != j && paths_meet(qc.P.paths[i], qc.Q.paths[j]))
        return {false, "intersection: P_" + std::to_string(i + 1) + " meets Q_" + std::to_string(j + 1)};
  return {};
}

QuasiCage quasi_cage_subset(const QuasiCage& qc, const std::vector<std::size_t>& indices) {
  check_indices(qc.order(), indices);
  QuasiCage out{ladder_subset(qc.certificate, indices), qc.p, qc.q, tree_subset(qc.P, indices),
                tree_subset(qc.Q, indices)};
  return out;
}

Cage cage_subset(const Cage& c, const std::vector<std::size_t>& indices) { return {quasi_cage_subset(c.qc, indices)}; }

}  // namespace ladderlab
