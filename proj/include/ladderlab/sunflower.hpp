#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/decomposition.hpp"
#include "ladderlab/graph.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab {

using Element = std::uint32_t;
using Label = std::uint32_t;

// Partial map element -> label.
struct LabeledSet {
  std::map<Element, Label> elements;
  std::size_t cardinality() const { return elements.size(); }
};

struct SunflowerWitness {
  std::vector<std::size_t> members;  // ascending indices into the family
  std::vector<Element> core;         // sorted
  std::map<Element, Label> core_labels;
  std::size_t order() const { return members.size(); }
};

struct SunflowerReport {
  bool valid = true;
  std::string violation;
};

// a * b! * (a*sigma)^b, saturating at UINT64_MAX.
std::uint64_t labeled_sunflower_threshold(std::uint64_t a, std::uint64_t b, std::uint64_t sigma);

// Follows the inductive proof when the family meets the threshold (and then always
// succeeds); otherwise runs a bounded best-effort search. nullopt = not found.
std::optional<SunflowerWitness> find_labeled_sunflower(const std::vector<LabeledSet>& family,
                                                       std::size_t a, std::size_t b,
                                                       std::size_t sigma);

SunflowerReport validate_sunflower(const std::vector<LabeledSet>& family, const SunflowerWitness& w);

struct Alignment {
  PathDecomposition pd;
  LadderCertificate certificate;  // semi-ladder
  std::vector<std::size_t> t;     // a_i introduced in bag t_i
  std::size_t order() const { return certificate.order(); }
};

struct SunflowerAlignment {
  Alignment alignment;
  std::vector<Vertex> core;
  std::size_t order() const { return alignment.order(); }
};

Alignment build_alignment(const Graph& g, const PathDecomposition& pd, const LadderCertificate& cert);

// Order needed for the extraction to be guaranteed: l (p+1)! [l (d+2)]^{p+1}, saturating.
std::uint64_t sunflower_alignment_threshold(std::uint64_t l, std::uint64_t p, std::uint64_t d);

std::optional<SunflowerAlignment> extract_sunflower_alignment(const Graph& g, const Alignment& al,
                                                              std::size_t target, std::uint32_t d);

SunflowerReport validate_alignment(const Graph& g, const Alignment& al);
SunflowerReport validate_sunflower_alignment(const Graph& g, const SunflowerAlignment& sa);

}  // namespace ladderlab
