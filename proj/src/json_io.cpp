#include "ladderlab/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ladderlab/errors.hpp"
#include "ladderlab/graph_io.hpp"

namespace ladderlab {

namespace fs = std::filesystem;

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw ParseError(line, "malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line, path + ": malformed JSON");
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path);
  out << dump_canonical(j);
}

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& why) {
  throw ArgumentError(what + " JSON: " + why);
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) bad(what, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(what, std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(what, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<Vertex> as_ids(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what, "expected an array of ids");
  std::vector<Vertex> out;
  for (const auto& x : j) {
    auto v = as_uint(x, what);
    if (v > UINT32_MAX) bad(what, "id out of range");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<std::vector<Vertex>> as_id_lists(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what, "expected an array of arrays");
  std::vector<std::vector<Vertex>> out;
  for (const auto& x : j) out.push_back(as_ids(x, what));
  return out;
}

std::pair<Vertex, Vertex> as_pair(const Json& j, const std::string& what) {
  auto ids = as_ids(j, what);
  if (ids.size() != 2) bad(what, "expected a pair");
  return {ids[0], ids[1]};
}

Json bags_json(const std::vector<Bag>& bags) {
  Json arr = Json::array();
  for (const auto& b : bags) arr.push_back(b);
  return arr;
}

Json tree_edges_json(const TreeDecomposition& td) {
  Json arr = Json::array();
  for (auto [x, y] : td.tree_edges) arr.push_back({x, y});
  return arr;
}

TreeDecomposition tree_from_json(const Json& j, const std::string& what) {
  TreeDecomposition td;
  for (auto& b : as_id_lists(field(j, "bags", what), what)) {
    sort_bag(b);
    td.bags.push_back(std::move(b));
  }
  for (const auto& e : field(j, "tree_edges", what)) {
    auto p = as_pair(e, what);
    td.tree_edges.emplace_back(p.first, p.second);
  }
  if (j.contains("root") && !j["root"].is_null()) td.root = as_uint(j["root"], what);
  return td;
}

}  // namespace

Json certificate_to_json(const LadderCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["d"] = c.d;
  j["a"] = c.a;
  j["b"] = c.b;
  if (c.kind == LadderKind::HalfGraph) j["convention"] = to_string(c.convention);
  return j;
}

LadderCertificate certificate_from_json(const Json& j) {
  const std::string what = "certificate";
  LadderCertificate c;
  const auto& kind = field(j, "kind", what);
  if (!kind.is_string()) bad(what, "kind must be a string");
  c.kind = parse_ladder_kind(kind.get<std::string>());
  auto d = as_uint(field(j, "d", what), what);
  if (d == 0 || d > UINT32_MAX) bad(what, "d must be a positive integer");
  c.d = static_cast<std::uint32_t>(d);
  c.a = as_ids(field(j, "a", what), what);
  c.b = as_ids(field(j, "b", what), what);
  if (c.a.size() != c.b.size()) bad(what, "a and b differ in length");
  if (j.contains("convention")) {
    if (!j["convention"].is_string()) bad(what, "convention must be a string");
    c.convention = parse_convention(j["convention"].get<std::string>());
  }
  return c;
}

Json report_to_json(const LadderReport& r) {
  Json j;
  j["valid"] = r.valid;
  if (r.violation) {
    const auto& v = *r.violation;
    Json vj;
    vj["i"] = v.i;
    vj["j"] = v.j;
    vj["observed"] = v.observed ? Json(*v.observed) : Json(nullptr);
    vj["required"] = v.required_close ? "close" : "far";
    j["violation"] = vj;
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json decomposition_to_json(const AnyDecomposition& dec) {
  Json j;
  if (auto* pd = std::get_if<PathDecomposition>(&dec)) {
    j["type"] = "path";
    j["bags"] = bags_json(pd->bags);
  } else if (auto* td = std::get_if<TreeDecomposition>(&dec)) {
    j["type"] = "tree";
    j["bags"] = bags_json(td->bags);
    j["tree_edges"] = tree_edges_json(*td);
    if (td->root) j["root"] = *td->root;
  } else {
    const auto& p = std::get<PairingDecomposition>(dec);
    j["type"] = "pairing";
    j["bags"] = bags_json(p.base.bags);
    j["tree_edges"] = tree_edges_json(p.base);
    j["root"] = p.base.root ? Json(*p.base.root) : Json(nullptr);
    j["d"] = p.d;
    j["root_pair"] = {p.root_pair.first, p.root_pair.second};
    Json leaves = Json::array();
    for (auto [x, y] : p.leaf_pairs) leaves.push_back({x, y});
    j["leaf_pairs"] = leaves;
    j["leaf_nodes"] = p.leaf_nodes;
    j["neighboring"] = p.neighboring;
  }
  return j;
}

AnyDecomposition decomposition_from_json(const Json& j) {
  const std::string what = "decomposition";
  const auto& type = field(j, "type", what);
  if (!type.is_string()) bad(what, "type must be a string");
  auto t = type.get<std::string>();
  if (t == "path") {
    PathDecomposition pd;
    for (auto& b : as_id_lists(field(j, "bags", what), what)) {
      sort_bag(b);
      pd.bags.push_back(std::move(b));
    }
    return pd;
  }
  if (t == "tree") return tree_from_json(j, what);
  if (t == "pairing") {
    PairingDecomposition p;
    p.base = tree_from_json(j, what);
    auto d = as_uint(field(j, "d", what), what);
    if (d == 0 || d > UINT32_MAX) bad(what, "d must be a positive integer");
    p.d = static_cast<std::uint32_t>(d);
    p.root_pair = as_pair(field(j, "root_pair", what), what);
    for (const auto& e : field(j, "leaf_pairs", what)) p.leaf_pairs.push_back(as_pair(e, what));
    for (const auto& e : field(j, "leaf_nodes", what)) p.leaf_nodes.push_back(as_uint(e, what));
    if (j.contains("neighboring")) {
      if (!j["neighboring"].is_boolean()) bad(what, "neighboring must be a boolean");
      p.neighboring = j["neighboring"].get<bool>();
    }
    return p;
  }
  bad(what, "unknown type '" + t + "'");
}

Json decomposition_report_to_json(const DecompositionReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["width"] = r.width;
  j["covers_all_vertices"] = r.covers_all_vertices;
  j["violation"] = r.valid ? Json(nullptr) : Json(r.violation);
  if (r.vertex) j["vertex"] = *r.vertex;
  if (r.pair) j["pair"] = {r.pair->first, r.pair->second};
  return j;
}

Json family_to_json(const std::vector<LabeledSet>& family) {
  Json arr = Json::array();
  for (const auto& s : family) {
    Json el = Json::object();
    for (auto [e, l] : s.elements) el[std::to_string(e)] = l;
    arr.push_back({{"elements", el}});
  }
  return arr;
}

std::vector<LabeledSet> family_from_json(const Json& j) {
  const std::string what = "family";
  if (!j.is_array()) bad(what, "expected an array");
  std::vector<LabeledSet> out;
  for (const auto& s : j) {
    const auto& el = field(s, "elements", what);
    if (!el.is_object()) bad(what, "elements must be an object");
    LabeledSet ls;
    for (auto it = el.begin(); it != el.end(); ++it) {
      std::size_t used = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(it.key(), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != it.key().size() || id > UINT32_MAX) bad(what, "element ids must be decimal integers");
      auto label = as_uint(it.value(), what);
      if (label > UINT32_MAX) bad(what, "label out of range");
      ls.elements[static_cast<Element>(id)] = static_cast<Label>(label);
    }
    out.push_back(std::move(ls));
  }
  return out;
}

Json sunflower_to_json(const SunflowerWitness& w) {
  Json labels = Json::object();
  for (auto [e, l] : w.core_labels) labels[std::to_string(e)] = l;
  return {{"members", w.members}, {"core", w.core}, {"core_labels", labels}};
}

Json quasi_cage_to_json(const QuasiCage& qc) {
  return {{"d", qc.certificate.d}, {"p", qc.p},           {"q", qc.q},          {"a", qc.certificate.a},
          {"b", qc.certificate.b}, {"P", qc.P.paths}, {"Q", qc.Q.paths}};
}

QuasiCage quasi_cage_from_json(const Json& j) {
  const std::string what = "cage";
  QuasiCage qc;
  auto d = as_uint(field(j, "d", what), what);
  if (d == 0 || d > UINT32_MAX) bad(what, "d must be a positive integer");
  qc.certificate.kind = LadderKind::SemiLadder;
  qc.certificate.d = static_cast<std::uint32_t>(d);
  qc.certificate.a = as_ids(field(j, "a", what), what);
  qc.certificate.b = as_ids(field(j, "b", what), what);
  qc.p = static_cast<Vertex>(as_uint(field(j, "p", what), what));
  qc.q = static_cast<Vertex>(as_uint(field(j, "q", what), what));
  qc.P = {qc.p, as_id_lists(field(j, "P", what), what), true};
  qc.Q = {qc.q, as_id_lists(field(j, "Q", what), what), false};
  // simplicity of Q is derived, not stored
  std::set<Vertex> seen;
  qc.Q.simple = true;
  for (const auto& path : qc.Q.paths)
    for (std::size_t k = 1; k < path.size(); ++k) qc.Q.simple = seen.insert(path[k]).second && qc.Q.simple;
  return qc;
}

Json uqw_to_json(const UqwWitness& w) {
  return {{"d", w.d}, {"deleted", w.deleted}, {"independent", w.independent}};
}

Json minor_model_to_json(const MinorModel& m) {
  Json edges = Json::array();
  for (auto [x, y] : m.pattern.edges()) edges.push_back({x, y});
  return {{"pattern_vertices", m.pattern.vertex_count()}, {"pattern_edges", edges}, {"branch_sets", m.branch_sets}};
}

Json sunflower_alignment_to_json(const SunflowerAlignment& sa) {
  Json j;
  j["certificate"] = certificate_to_json(sa.alignment.certificate);
  j["decomposition"] = decomposition_to_json(sa.alignment.pd);
  j["t"] = sa.alignment.t;
  j["core"] = sa.core;
  return j;
}

Json bound_row_to_json(const BoundRow& row) {
  auto value = [](const std::optional<BoundValue>& v, Json& j, const std::string& key) {
    if (!v) {
      j[key] = nullptr;
    } else if (v->is_exact()) {
      j[key] = v->decimal();
    } else {
      j[key] = nullptr;
      j[key + "_log2_at_least"] = v->log2_at_least.get_str();
    }
  };
  Json j;
  j["class"] = to_string(row.cls);
  auto pname = bound_parameter(row.cls);
  if (!pname.empty()) j[pname] = row.param;
  j["d"] = row.d;
  value(row.lower, j, "lower");
  value(row.upper, j, "upper");
  j["notes"] = row.notes;
  return j;
}

Json bundle_meta(const WitnessBundle& b) {
  Json j;
  j["family"] = b.family;
  j["params"] = b.params;
  j["expected_order"] = b.expected_order;
  j["expected_distance"] = b.expected_distance;
  j["expected_width"] = b.expected_width ? Json(*b.expected_width) : Json(nullptr);
  j["vertex_count"] = b.graph.vertex_count();
  j["edge_count"] = b.graph.edge_count();
  return j;
}

void write_bundle(const std::string& dir, const WitnessBundle& b) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ArgumentError("cannot create directory " + dir);
  fs::path root(dir);
  write_edge_list_file((root / "graph.txt").string(), b.graph);
  write_json_file((root / "certificate.json").string(), certificate_to_json(b.certificate));
  if (b.pairing) write_json_file((root / "decomposition.json").string(), decomposition_to_json(*b.pairing));
  else if (b.path_decomposition)
    write_json_file((root / "decomposition.json").string(), decomposition_to_json(*b.path_decomposition));
  write_json_file((root / "meta.json").string(), bundle_meta(b));
}

LoadedBundle read_bundle(const std::string& dir) {
  fs::path root(dir);
  LoadedBundle out;
  out.graph = read_edge_list_file((root / "graph.txt").string());
  out.certificate = certificate_from_json(read_json_file((root / "certificate.json").string()));
  if (fs::exists(root / "decomposition.json"))
    out.decomposition = decomposition_from_json(read_json_file((root / "decomposition.json").string()));
  if (fs::exists(root / "meta.json")) out.meta = read_json_file((root / "meta.json").string());
  return out;
}

}  // namespace ladderlab
