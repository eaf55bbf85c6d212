#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ladderlab/bounds.hpp"
#include "ladderlab/cages.hpp"
#include "ladderlab/decomposition.hpp"
#include "ladderlab/generators.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/sparsity.hpp"
#include "ladderlab/sunflower.hpp"

namespace ladderlab {

using Json = nlohmann::json;  // std::map-backed, so keys come out sorted

// Two-space indented dump with a trailing newline; parse + dump is the identity on our output.
std::string dump_canonical(const Json& j);
// Malformed JSON raises ParseError with the offending line.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json certificate_to_json(const LadderCertificate& c);
LadderCertificate certificate_from_json(const Json& j);
Json report_to_json(const LadderReport& r);

using AnyDecomposition = std::variant<PathDecomposition, TreeDecomposition, PairingDecomposition>;
Json decomposition_to_json(const AnyDecomposition& d);
AnyDecomposition decomposition_from_json(const Json& j);
Json decomposition_report_to_json(const DecompositionReport& r);

Json family_to_json(const std::vector<LabeledSet>& family);
std::vector<LabeledSet> family_from_json(const Json& j);
Json sunflower_to_json(const SunflowerWitness& w);

Json quasi_cage_to_json(const QuasiCage& qc);
QuasiCage quasi_cage_from_json(const Json& j);

Json uqw_to_json(const UqwWitness& w);
Json minor_model_to_json(const MinorModel& m);
Json sunflower_alignment_to_json(const SunflowerAlignment& sa);

Json bound_row_to_json(const BoundRow& row);

Json bundle_meta(const WitnessBundle& b);

// graph.txt, certificate.json, decomposition.json (when present), meta.json
void write_bundle(const std::string& dir, const WitnessBundle& b);

struct LoadedBundle {
  Graph graph;
  LadderCertificate certificate;
  std::optional<AnyDecomposition> decomposition;
  Json meta;
};
LoadedBundle read_bundle(const std::string& dir);

}  // namespace ladderlab
