#include "ladderlab/sunflower.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > UINT64_MAX / x) return UINT64_MAX;
  return x * y;
}

std::uint64_t sat_pow(std::uint64_t x, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, x);
  return r;
}

std::uint64_t sat_fact(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

// Family view with a set of stripped elements removed from every member.
struct View {
  const std::vector<LabeledSet>& family;
  std::vector<Element> stripped;  // sorted

  bool live(Element e) const { return !std::binary_search(stripped.begin(), stripped.end(), e); }

  std::size_t cardinality(std::size_t i) const {
    std::size_t c = 0;
    for (auto& [e, l] : family[i].elements) c += live(e);
    return c;
  }

  std::vector<std::size_t> greedy_pack(const std::vector<std::size_t>& order, std::size_t a) const {
    std::set<Element> used;
    std::vector<std::size_t> chosen;
    for (std::size_t i : order) {
      bool clash = false;
      for (auto& [e, l] : family[i].elements)
        if (live(e) && used.count(e)) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (auto& [e, l] : family[i].elements)
        if (live(e)) used.insert(e);
      chosen.push_back(i);
      if (chosen.size() == a) break;
    }
    return chosen;
  }

  // (element, label) -> members carrying it, restricted to `members`.
  std::map<std::pair<Element, Label>, std::vector<std::size_t>> groups(const std::vector<std::size_t>& members) const {
    std::map<std::pair<Element, Label>, std::vector<std::size_t>> g;
    for (std::size_t i : members)
      for (auto& [e, l] : family[i].elements)
        if (live(e)) g[{e, l}].push_back(i);
    return g;
  }

  View strip(Element e) const {
    View v{family, stripped};
    v.stripped.insert(std::lower_bound(v.stripped.begin(), v.stripped.end(), e), e);
    return v;
  }
};

// The inductive proof, step for step. Only called when the threshold holds.
std::vector<std::size_t> threshold_route(const View& view, const std::vector<std::size_t>& members,
                                     std::size_t a, std::size_t b, std::size_t sigma) {
  if (b == 0) return {members.begin(), members.begin() + static_cast<std::ptrdiff_t>(std::min(a, members.size()))};
  std::uint64_t elem_threshold = sat_mul(sat_fact(b - 1), sat_pow(sat_mul(a, sigma), b));
  std::uint64_t label_threshold = sat_mul(a, sat_mul(sat_fact(b - 1), sat_pow(sat_mul(a, sigma), b - 1)));
  auto groups = view.groups(members);
  std::map<Element, std::size_t> element_count;
  for (auto& [key, list] : groups) element_count[key.first] += list.size();
  for (auto& [e, count] : element_count) {
    if (count < elem_threshold) continue;
    for (auto it = groups.lower_bound({e, 0}); it != groups.end() && it->first.first == e; ++it)
      if (it->second.size() >= label_threshold) return threshold_route(view.strip(e), it->second, a, b - 1, sigma);
    throw InternalError("labeled sunflower: frequent element without a frequent label");
  }
  return view.greedy_pack(members, a);
}

struct BestEffort {
  std::size_t a;
  std::size_t budget = 20000;

  std::vector<std::size_t> run(const View& view, const std::vector<std::size_t>& members, std::size_t depth) {
    if (budget == 0 || members.size() < a) return {};
    --budget;
    auto got = view.greedy_pack(members, a);
    if (got.size() == a) return got;
    std::vector<std::size_t> by_size = members;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t x, std::size_t y) { return view.cardinality(x) < view.cardinality(y); });
    got = view.greedy_pack(by_size, a);
    if (got.size() == a) {
      std::sort(got.begin(), got.end());
      return got;
    }
    if (depth == 0) return {};
    auto groups = view.groups(members);
    std::vector<std::tuple<std::size_t, Element, Label>> order;
    for (auto& [key, list] : groups)
      if (list.size() >= a) order.emplace_back(list.size(), key.first, key.second);
    std::sort(order.begin(), order.end(), [](auto& x, auto& y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
      return std::make_pair(std::get<1>(x), std::get<2>(x)) < std::make_pair(std::get<1>(y), std::get<2>(y));
    });
    for (auto& [size, e, l] : order) {
      auto res = run(view.strip(e), groups.at({e, l}), depth - 1);
      if (res.size() == a) return res;
      if (budget == 0) break;
    }
    return {};
  }
};

SunflowerWitness make_witness(const std::vector<LabeledSet>& family, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  SunflowerWitness w;
  w.members = members;
  std::map<Element, Label> core = family[members[0]].elements;
  for (std::size_t k = 1; k < members.size(); ++k) {
    std::map<Element, Label> next;
    for (auto& [e, l] : core)
      if (family[members[k]].elements.count(e)) next.emplace(e, l);
    core = std::move(next);
  }
  for (auto& [e, l] : core) w.core.push_back(e);
  w.core_labels = core;
  return w;
}

}  // namespace

std::uint64_t labeled_sunflower_threshold(std::uint64_t a, std::uint64_t b, std::uint64_t sigma) {
  return sat_mul(a, sat_mul(sat_fact(b), sat_pow(sat_mul(a, sigma), b)));
}

std::optional<SunflowerWitness> find_labeled_sunflower(const std::vector<LabeledSet>& family,
                                                       std::size_t a, std::size_t b, std::size_t sigma) {
  if (a == 0) throw ArgumentError("sunflower order must be positive");
  if (sigma == 0) throw ArgumentError("label alphabet must be non-empty");
  for (auto& s : family) {
    if (s.cardinality() > b) throw ArgumentError("family member exceeds the cardinality bound");
    for (auto& [e, l] : s.elements)
      if (l >= sigma) throw ArgumentError("label outside the alphabet");
  }
  if (family.size() < a) return std::nullopt;
  View view{family, {}};
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<std::size_t> got;
  if (family.size() >= labeled_sunflower_threshold(a, b, sigma)) {
    got = threshold_route(view, all, a, b, sigma);
    if (got.size() != a) throw InternalError("labeled sunflower search failed above its threshold");
  } else {
    BestEffort search{a};
    got = search.run(view, all, b);
    if (got.size() != a) return std::nullopt;
  }
  auto w = make_witness(family, got);
  auto rep = validate_sunflower(family, w);
  if (!rep.valid) throw InternalError("sunflower extraction produced an invalid witness: " + rep.violation);
  return w;
}

SunflowerReport validate_sunflower(const std::vector<LabeledSet>& family, const SunflowerWitness& w) {
  auto bad = [](std::string why) { return SunflowerReport{false, std::move(why)}; };
  if (w.members.empty()) return bad("no members");
  for (std::size_t k = 0; k < w.members.size(); ++k) {
    if (w.members[k] >= family.size()) return bad("member index out of range");
    if (k > 0 && w.members[k - 1] >= w.members[k]) return bad("member indices not strictly ascending");
  }
  std::vector<Element> core = w.core;
  std::sort(core.begin(), core.end());
  if (std::adjacent_find(core.begin(), core.end()) != core.end()) return bad("core has repeated elements");
  if (w.core_labels.size() != core.size()) return bad("core labels do not match the core");
  for (Element e : core)
    if (!w.core_labels.count(e)) return bad("core element without a label");

  auto keys = [&](std::size_t i) {
    std::vector<Element> s;
    for (auto& [e, l] : family[i].elements) s.push_back(e);
    return s;
  };
  for (std::size_t x = 0; x < w.members.size(); ++x) {
    auto sx = keys(w.members[x]);
    if (!std::includes(sx.begin(), sx.end(), core.begin(), core.end()))
      return bad("member " + std::to_string(w.members[x]) + " does not contain the core");
    for (Element e : core)
      if (family[w.members[x]].elements.at(e) != w.core_labels.at(e))
        return bad("member " + std::to_string(w.members[x]) + " labels core element " + std::to_string(e) +
                   " differently");
    for (std::size_t y = x + 1; y < w.members.size(); ++y) {
      auto sy = keys(w.members[y]);
      std::vector<Element> inter;
      std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(inter));
      if (inter != core)
        return bad("intersection of members " + std::to_string(w.members[x]) + " and " +
                   std::to_string(w.members[y]) + " differs from the core");
    }
  }
  return {};
}

Alignment build_alignment(const Graph& g, const PathDecomposition& pd, const LadderCertificate& cert) {
  if (cert.empty()) throw StructuralError("alignment needs a non-empty certificate");
  LadderCertificate semi = as_kind(cert, LadderKind::SemiLadder);
  auto rep = verify_certificate(g, semi);
  if (!rep.valid) throw StructuralError("alignment needs a valid semi-ladder");
  Alignment al;
  al.pd = to_nice(g, pd);
  al.certificate = semi;
  for (Vertex a : semi.a) {
    auto t = introduce_index(al.pd, a);
    if (!t) throw StructuralError("vertex " + std::to_string(a) + " is in no bag");
    al.t.push_back(*t);
  }
  return al;
}

std::uint64_t sunflower_alignment_threshold(std::uint64_t l, std::uint64_t p, std::uint64_t d) {
  return labeled_sunflower_threshold(l, p + 1, d + 2);
}

std::optional<SunflowerAlignment> extract_sunflower_alignment(const Graph& g, const Alignment& al,
                                                              std::size_t target, std::uint32_t d) {
  if (target == 0) throw ArgumentError("target order must be positive");
  if (d != al.certificate.d) throw ArgumentError("distance parameter does not match the alignment");
  auto rep = validate_alignment(g, al);
  if (!rep.valid) throw StructuralError("invalid alignment: " + rep.violation);
  std::vector<LabeledSet> family;
  for (std::size_t i = 0; i < al.order(); ++i) {
    auto dist = distances_bounded(g, al.certificate.a[i], d);
    LabeledSet s;
    for (Vertex v : al.pd.bags[al.t[i]]) s.elements[v] = dist.reachable(v) ? *dist.get(v) : d + 1;
    family.push_back(std::move(s));
  }
  std::size_t b = al.pd.width() + 1;
  auto w = find_labeled_sunflower(family, target, b, d + 2);
  if (!w) return std::nullopt;
  SunflowerAlignment sa;
  std::vector<std::size_t> idx;
  for (std::size_t m : w->members) idx.push_back(m + 1);
  sa.alignment.pd = al.pd;
  sa.alignment.certificate = ladder_subset(al.certificate, idx);
  for (std::size_t m : w->members) sa.alignment.t.push_back(al.t[m]);
  sa.core = w->core;
  auto check = validate_sunflower_alignment(g, sa);
  if (!check.valid) throw InternalError("sunflower alignment extraction failed validation: " + check.violation);
  return sa;
}

SunflowerReport validate_alignment(const Graph& g, const Alignment& al) {
  auto bad = [](std::string why) { return SunflowerReport{false, std::move(why)}; };
  auto pdr = validate_path_decomposition(g, al.pd);
  if (!pdr.valid) return bad("path decomposition: " + pdr.violation);
  const auto& c = al.certificate;
  if (c.kind != LadderKind::SemiLadder) return bad("certificate is not a semi-ladder");
  if (c.empty()) return bad("empty certificate");
  try {
    auto cr = verify_certificate(g, c);
    if (!cr.valid)
      return bad("semi-ladder condition fails at (" + std::to_string(cr.violation->i) + "," +
                 std::to_string(cr.violation->j) + ")");
  } catch (const StructuralError& e) {
    return bad(std::string("certificate: ") + e.what());
  }
  if (al.t.size() != c.order()) return bad("wrong number of bag indices");
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < al.t.size(); ++i) {
    if (al.t[i] >= al.pd.bags.size()) return bad("bag index out of range");
    if (!seen.insert(al.t[i]).second) return bad("bag indices are not distinct");
    const auto& bag = al.pd.bags[al.t[i]];
    if (std::find(bag.begin(), bag.end(), c.a[i]) == bag.end())
      return bad("a_" + std::to_string(i + 1) + " is not in its bag");
  }
  return {};
}

SunflowerReport validate_sunflower_alignment(const Graph& g, const SunflowerAlignment& sa) {
  auto bad = [](std::string why) { return SunflowerReport{false, std::move(why)}; };
  auto base = validate_alignment(g, sa.alignment);
  if (!base.valid) return base;
  const auto& al = sa.alignment;
  std::vector<Vertex> core = sa.core;
  std::sort(core.begin(), core.end());
  if (std::adjacent_find(core.begin(), core.end()) != core.end()) return bad("core has repeated vertices");
  for (Vertex v : core) g.check_vertex(v);
  std::vector<Bag> bags;
  for (std::size_t t : al.t) {
    Bag bag = al.pd.bags[t];
    sort_bag(bag);
    bags.push_back(std::move(bag));
  }
  for (std::size_t x = 0; x < bags.size(); ++x) {
    if (!std::includes(bags[x].begin(), bags[x].end(), core.begin(), core.end()))
      return bad("intersection clause: bag of a_" + std::to_string(x + 1) + " does not contain the core");
    for (std::size_t y = x + 1; y < bags.size(); ++y) {
      Bag inter;
      std::set_intersection(bags[x].begin(), bags[x].end(), bags[y].begin(), bags[y].end(),
                            std::back_inserter(inter));
      if (inter != core)
        return bad("intersection clause: bags of a_" + std::to_string(x + 1) + " and a_" + std::to_string(y + 1) +
                   " do not meet exactly in the core");
    }
  }
  std::uint32_t d = al.certificate.d;
  std::vector<std::uint32_t> first;
  for (std::size_t i = 0; i < al.order(); ++i) {
    auto dist = distances_bounded(g, al.certificate.a[i], d);
    std::vector<std::uint32_t> prof;
    for (Vertex v : core) prof.push_back(dist.reachable(v) ? *dist.get(v) : d + 1);
    if (i == 0) first = prof;
    else if (prof != first)
      return bad("profile clause: a_" + std::to_string(i + 1) + " has a different profile on the core");
  }
  return {};
}

}  // namespace ladderlab
