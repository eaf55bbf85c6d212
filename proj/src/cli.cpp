#include "ladderlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ladderlab/bounds.hpp"
#include "ladderlab/cages.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/generators.hpp"
#include "ladderlab/graph_io.hpp"
#include "ladderlab/json_io.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/sparsity.hpp"
#include "ladderlab/sunflower.hpp"

namespace ladderlab {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  bool json = false;
  std::string dot;
  unsigned threads = 1;

  std::string family, out_dir;
  std::optional<int> k, h, p, dd;

  std::string graph, certificate, decomposition;
  std::string mode;
  std::string set;
  std::string pipeline;
  std::optional<std::size_t> m, target;
  std::string d_text;
  std::string bound_class;
  std::optional<std::int64_t> delta, pw, t, c;
};

using Lines = std::vector<std::pair<std::string, std::string>>;

void print_lines(std::ostream& out, const Lines& lines) {
  std::size_t w = 0;
  for (auto& [k, v] : lines) w = std::max(w, k.size());
  for (auto& [k, v] : lines) out << k << ':' << std::string(w - k.size() + 1, ' ') << v << '\n';
}

std::string join(const std::vector<Vertex>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s.empty() ? "-" : s;
}

std::uint32_t parse_d(const std::string& text) {
  if (text.empty()) throw UsageError("--d is required");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 1) throw UsageError("--d must be a positive integer");
  return static_cast<std::uint32_t>(v);
}

std::pair<std::uint32_t, std::uint32_t> parse_d_range(const std::string& text) {
  auto sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-');
    skip = 1;
  }
  if (sep == std::string::npos) {
    auto d = parse_d(text);
    return {d, d};
  }
  auto lo = parse_d(text.substr(0, sep)), hi = parse_d(text.substr(sep + skip));
  if (lo > hi) throw UsageError("empty d range");
  return {lo, hi};
}

std::vector<Vertex> parse_set(const Graph& g, const std::string& text) {
  if (text.empty() || text == "all") {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
  }
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw UsageError("bad vertex id '" + tok + "' in --set");
    out.push_back(static_cast<Vertex>(v));
  }
  return normalize_set(g, out);
}

void write_dot_file(const Options& o, const Graph& g, const std::vector<Vertex>& highlight) {
  if (o.dot.empty()) return;
  std::ofstream f(o.dot);
  if (!f) throw ArgumentError("cannot write " + o.dot);
  write_dot(f, g, highlight);
}

std::vector<Vertex> ladder_vertices(const LadderCertificate& c) {
  std::vector<Vertex> v = c.a;
  v.insert(v.end(), c.b.begin(), c.b.end());
  return v;
}

int cmd_gen(const Options& o, std::ostream& out) {
  auto need = [](const std::optional<int>& x, const char* name) {
    if (!x) throw UsageError(std::string("--") + name + " is required for this family");
    return *x;
  };
  WitnessBundle b;
  if (o.family == "bounded-degree") b = gen_bounded_degree(need(o.k, "k"), need(o.h, "h"));
  else if (o.family == "planar-even") b = gen_planar_even(need(o.h, "h"));
  else if (o.family == "pathwidth") b = gen_pathwidth(need(o.p, "p"), need(o.dd, "d"), o.k.value_or(0));
  else if (o.family == "treewidth") b = gen_treewidth(need(o.dd, "d"), need(o.k, "k"));
  else throw UsageError("unknown family '" + o.family + "' (bounded-degree, planar-even, pathwidth, treewidth)");
  if (o.out_dir.empty()) throw UsageError("--out is required");
  write_bundle(o.out_dir, b);
  write_dot_file(o, b.graph, ladder_vertices(b.certificate));
  if (o.json) {
    out << dump_canonical(bundle_meta(b));
  } else {
    print_lines(out, {{"family", b.family},
                      {"vertices", std::to_string(b.graph.vertex_count())},
                      {"edges", std::to_string(b.graph.edge_count())},
                      {"order", std::to_string(b.certificate.order())},
                      {"distance", std::to_string(b.certificate.d)},
                      {"width", b.expected_width ? std::to_string(*b.expected_width) : "-"},
                      {"written", o.out_dir}});
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto g = read_edge_list_file(o.graph);
  auto cert = certificate_from_json(read_json_file(o.certificate));
  Json j;
  Lines lines;
  bool ok = true;
  try {
    auto rep = verify_certificate(g, cert, o.threads);
    j["certificate"] = report_to_json(rep);
    ok = rep.valid;
    if (rep.valid) {
      lines.push_back({"certificate", "valid (" + to_string(cert.kind) + ", order " + std::to_string(cert.order()) +
                                          ", d=" + std::to_string(cert.d) + ")"});
    } else {
      const auto& v = *rep.violation;
      lines.push_back({"certificate", "invalid: dist(b_" + std::to_string(v.i) + ", a_" + std::to_string(v.j) +
                                          ") = " + (v.observed ? std::to_string(*v.observed) : "unreachable") +
                                          ", required " + (v.required_close ? "<= " : "> ") + std::to_string(cert.d)});
    }
  } catch (const StructuralError& e) {
    ok = false;
    j["certificate"] = {{"valid", false}, {"violation", {{"structural", e.what()}}}};
    lines.push_back({"certificate", std::string("invalid: ") + e.what()});
  }
  if (!o.decomposition.empty()) {
    auto dec = decomposition_from_json(read_json_file(o.decomposition));
    DecompositionReport rep;
    try {
      if (auto* pd = std::get_if<PathDecomposition>(&dec)) rep = validate_path_decomposition(g, *pd);
      else if (auto* td = std::get_if<TreeDecomposition>(&dec)) rep = validate_tree_decomposition(g, *td);
      else rep = validate_pairing(g, std::get<PairingDecomposition>(dec), o.threads);
    } catch (const ArgumentError& e) {
      rep.valid = false;
      rep.violation = e.what();
    }
    ok = ok && rep.valid;
    j["decomposition"] = decomposition_report_to_json(rep);
    lines.push_back({"decomposition", rep.valid ? "valid (width " + std::to_string(rep.width) + ")"
                                                : "invalid: " + rep.violation});
  }
  write_dot_file(o, g, ladder_vertices(cert));
  j["valid"] = ok;
  if (o.json) out << dump_canonical(j);
  else print_lines(out, lines);
  return ok ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out) {
  auto g = read_edge_list_file(o.graph);
  auto d = parse_d(o.d_text);
  std::string mode = o.mode.empty() ? "exact" : o.mode;
  LadderCertificate c;
  if (mode == "exact") c = max_semi_ladder_exact(g, d);
  else if (mode == "greedy") c = greedy_semi_ladder(g, d);
  else throw UsageError("--mode must be exact or greedy");
  write_dot_file(o, g, ladder_vertices(c));
  if (o.json) {
    out << dump_canonical({{"mode", mode}, {"order", c.order()}, {"certificate", certificate_to_json(c)}});
  } else {
    print_lines(out, {{"mode", mode}, {"order", std::to_string(c.order())}, {"a", join(c.a)}, {"b", join(c.b)}});
  }
  return 0;
}

int cmd_profiles(const Options& o, std::ostream& out) {
  auto g = read_edge_list_file(o.graph);
  auto d = parse_d(o.d_text);
  auto A = parse_set(g, o.set);
  auto count = profile_count(g, A, d, o.threads);
  auto bound = neighborhood_upper(A.size(), d);
  bool within = mpz_class(count) <= bound;
  write_dot_file(o, g, A);
  if (o.json) {
    out << dump_canonical({{"d", d},
                           {"set_size", A.size()},
                           {"count", count},
                           {"planar_bound", bound.get_str()},
                           {"within_planar_bound", within}});
  } else {
    print_lines(out, {{"d", std::to_string(d)},
                      {"set size", std::to_string(A.size())},
                      {"profiles", std::to_string(count)},
                      {"planar bound", bound.get_str() + (within ? " (not exceeded)" : " (exceeded)")}});
  }
  return 0;
}

int cmd_extract(const Options& o, std::ostream& out) {
  auto g = read_edge_list_file(o.graph);
  Json j;
  j["pipeline"] = o.pipeline;
  Lines lines{{"pipeline", o.pipeline}};
  std::vector<Vertex> highlight;
  auto need_cert = [&] {
    if (o.certificate.empty()) throw UsageError("--certificate is required for this pipeline");
    return certificate_from_json(read_json_file(o.certificate));
  };
  if (o.pipeline == "quasi-cage" || o.pipeline == "cage") {
    auto cert = need_cert();
    auto res = run_cage_pipeline(g, cert);
    j["stage_orders"] = res.stage_orders;
    std::string stages;
    for (auto s : res.stage_orders) stages += (stages.empty() ? "" : " -> ") + std::to_string(s);
    lines.push_back({"stage orders", stages});
    const QuasiCage* found = nullptr;
    if (o.pipeline == "cage" && res.cage) found = &res.cage->qc;
    if (o.pipeline == "quasi-cage" && res.quasi_cage) found = &*res.quasi_cage;
    j["found"] = found != nullptr;
    j["result"] = found ? quasi_cage_to_json(*found) : Json(nullptr);
    if (found) {
      lines.push_back({"order", std::to_string(found->order())});
      lines.push_back({"p", std::to_string(found->p)});
      lines.push_back({"q", std::to_string(found->q)});
      lines.push_back({"a", join(found->certificate.a)});
      lines.push_back({"b", join(found->certificate.b)});
      highlight = ladder_vertices(found->certificate);
      highlight.push_back(found->p);
      highlight.push_back(found->q);
    } else {
      lines.push_back({"result", "not found"});
    }
  } else if (o.pipeline == "sunflower-alignment") {
    auto cert = need_cert();
    PathDecomposition pd;
    if (o.decomposition.empty()) {
      pd = layer_path_decomposition(g);
    } else {
      auto dec = decomposition_from_json(read_json_file(o.decomposition));
      if (!std::holds_alternative<PathDecomposition>(dec)) throw UsageError("sunflower alignment needs a path decomposition");
      pd = std::get<PathDecomposition>(dec);
    }
    if (!o.target) throw UsageError("--target is required for this pipeline");
    auto al = build_alignment(g, pd, cert);
    auto sa = extract_sunflower_alignment(g, al, *o.target, cert.d);
    j["found"] = sa.has_value();
    j["result"] = sa ? sunflower_alignment_to_json(*sa) : Json(nullptr);
    if (sa) {
      lines.push_back({"order", std::to_string(sa->order())});
      lines.push_back({"core", join(sa->core)});
      lines.push_back({"a", join(sa->alignment.certificate.a)});
      lines.push_back({"b", join(sa->alignment.certificate.b)});
      highlight = ladder_vertices(sa->alignment.certificate);
    } else {
      lines.push_back({"result", "not found"});
    }
  } else if (o.pipeline == "uqw") {
    auto d = parse_d(o.d_text);
    if (!o.m || *o.m == 0) throw UsageError("--m (>= 1) is required for this pipeline");
    auto A = parse_set(g, o.set);
    auto sigma = degeneracy_order(g);
    auto wcol = wcol_of_order(g, sigma, d, o.threads);
    auto w = uqw_extract(g, A, d, *o.m, sigma);
    j["wcol_of_order"] = wcol;
    j["found"] = w.has_value();
    j["result"] = w ? uqw_to_json(*w) : Json(nullptr);
    lines.push_back({"wcol of order", std::to_string(wcol)});
    if (w) {
      lines.push_back({"deleted", join(w->deleted)});
      lines.push_back({"independent", join(w->independent)});
      highlight = w->independent;
    } else {
      lines.push_back({"result", "not found"});
    }
  } else {
    throw UsageError("--pipeline must be quasi-cage, cage, sunflower-alignment or uqw");
  }
  write_dot_file(o, g, highlight);
  if (o.json) out << dump_canonical(j);
  else print_lines(out, lines);
  return 0;
}

int cmd_wcol(const Options& o, std::ostream& out) {
  auto g = read_edge_list_file(o.graph);
  auto d = parse_d(o.d_text);
  std::size_t value = 0;
  VertexOrdering sigma;
  std::string mode = o.mode.empty() ? "heuristic" : o.mode;
  if (mode == "heuristic") {
    sigma = degeneracy_order(g);
    value = wcol_of_order(g, sigma, d, o.threads);
  } else if (mode == "exact") {
    auto r = wcol_exact(g, d);
    value = r.value;
    sigma = r.sigma;
  } else {
    throw UsageError("--mode must be heuristic or exact");
  }
  write_dot_file(o, g, {});
  if (o.json) out << dump_canonical({{"mode", mode}, {"d", d}, {"wcol", value}, {"order", sigma.order}});
  else print_lines(out, {{"mode", mode}, {"d", std::to_string(d)}, {"wcol", std::to_string(value)}, {"order", join(sigma.order)}});
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  BoundClass cls;
  try {
    cls = parse_bound_class(o.bound_class);
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
  auto [lo, hi] = parse_d_range(o.d_text);
  std::string pname = bound_parameter(cls);
  std::optional<std::int64_t> given;
  if (pname == "delta") given = o.delta;
  else if (pname == "p") given = o.pw;
  else if (pname == "t") given = o.t;
  else if (pname == "c") given = o.c;
  if (!pname.empty() && !given) throw UsageError("--" + pname + " is required for class " + o.bound_class);
  auto rows = bounds_table(cls, given.value_or(0), lo, hi);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(bound_row_to_json(r));
    out << dump_canonical({{"rows", arr}});
  } else {
    out << render_bounds_text(rows);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-d half graphs, semi-ladders and the sparsity bounds around them", "ladderlab"};
  app.set_help_flag("--help", "Print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print JSON instead of aligned text");
  app.add_option("--dot", o.dot, "Also write the graph in DOT format to this file");
  app.add_option("--threads", o.threads, "Worker threads for batched BFS (0 = hardware)");

  auto* gen = app.add_subcommand("gen", "Build a witness family and write its bundle directory");
  gen->add_option("family", o.family, "bounded-degree | planar-even | pathwidth | treewidth")->required();
  gen->add_option("--k", o.k);
  gen->add_option("--h", o.h);
  gen->add_option("--p", o.p);
  gen->add_option("--d", o.dd);
  gen->add_option("--out", o.out_dir, "Output directory")->required();

  auto* verify = app.add_subcommand("verify", "Check a certificate (and optionally a decomposition) against a graph");
  verify->add_option("graph", o.graph)->required();
  verify->add_option("certificate", o.certificate)->required();
  verify->add_option("--decomposition", o.decomposition);

  auto* search = app.add_subcommand("search", "Find a semi-ladder");
  search->add_option("graph", o.graph)->required();
  search->add_option("--d", o.d_text)->required();
  search->add_option("--mode", o.mode, "exact | greedy (default exact)");

  auto* profiles = app.add_subcommand("profiles", "Count distinct distance profiles on a vertex set");
  profiles->add_option("graph", o.graph)->required();
  profiles->add_option("--set", o.set, "Comma-separated ids, or 'all'")->required();
  profiles->add_option("--d", o.d_text)->required();

  auto* extract = app.add_subcommand("extract", "Run an extraction pipeline");
  extract->add_option("graph", o.graph)->required();
  extract->add_option("--pipeline", o.pipeline, "quasi-cage | cage | sunflower-alignment | uqw")->required();
  extract->add_option("--certificate", o.certificate);
  extract->add_option("--decomposition", o.decomposition);
  extract->add_option("--d", o.d_text);
  extract->add_option("--m", o.m);
  extract->add_option("--set", o.set);
  extract->add_option("--target", o.target);

  auto* wcol = app.add_subcommand("wcol", "Weak coloring number of the degeneracy order, or exactly");
  wcol->add_option("graph", o.graph)->required();
  wcol->add_option("--d", o.d_text)->required();
  wcol->add_option("--mode", o.mode, "heuristic | exact (default heuristic)");

  auto* bounds = app.add_subcommand("bounds", "Exact lower and upper bounds per graph class");
  bounds->add_option("--class", o.bound_class, "degree | planar | pathwidth | treewidth | minor-free | wcol | neighborhood")
      ->required();
  bounds->add_option("--delta", o.delta);
  bounds->add_option("--p", o.pw);
  bounds->add_option("--t", o.t);
  bounds->add_option("--c", o.c);
  bounds->add_option("--d", o.d_text, "A value or a range lo-hi")->required();

  std::vector<std::string> argv_store{"ladderlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (profiles->parsed()) return cmd_profiles(o, out);
    if (extract->parsed()) return cmd_extract(o, out);
    if (wcol->parsed()) return cmd_wcol(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ladderlab
