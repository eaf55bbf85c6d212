#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/graph.hpp"

namespace ladderlab {

enum class LadderKind { HalfGraph, SemiLadder, CoMatching };
enum class DiagonalConvention { Strict, Inclusive };

std::string to_string(LadderKind k);
std::string to_string(DiagonalConvention c);
LadderKind parse_ladder_kind(const std::string& s);
DiagonalConvention parse_convention(const std::string& s);

// Sequences are 0-based in memory; reports and index lists use 1-based indices.
struct LadderCertificate {
  LadderKind kind = LadderKind::SemiLadder;
  std::uint32_t d = 1;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  DiagonalConvention convention = DiagonalConvention::Strict;

  std::size_t order() const { return a.size(); }
  bool empty() const { return a.empty(); }
  friend bool operator==(const LadderCertificate&, const LadderCertificate&) = default;
};

// Whether dist(b_i, a_j) must be <= d (true), > d (false), or is free (nullopt). i, j are 1-based.
std::optional<bool> required_close(const LadderCertificate& c, std::size_t i, std::size_t j);

struct LadderViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<std::uint32_t> observed;  // nullopt = unreachable
  bool required_close = false;
};

struct LadderReport {
  bool valid = true;
  std::optional<LadderViolation> violation;
};

// Throws StructuralError on repeated vertices, ArgumentError on bad ids or d = 0.
// An empty certificate is vacuously valid (search routines return it when nothing exists).
LadderReport verify_certificate(const Graph& g, const LadderCertificate& c, unsigned threads = 1);

void check_distinct(const LadderCertificate& c);

LadderCertificate ladder_subset(const LadderCertificate& c, const std::vector<std::size_t>& indices);

// Same sequences with a different kind; used to re-check "every half graph is a semi-ladder".
LadderCertificate as_kind(LadderCertificate c, LadderKind kind);

// Removes vertex collisions a_i = b_j from a half-graph pattern, keeping >= ceil(l/2) indices.
LadderCertificate dedup_half_graph(const Graph& g, const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b, std::uint32_t d,
                                   DiagonalConvention convention = DiagonalConvention::Strict);

// Default vertex guard for exhaustive search, overridable via LADDERLAB_SIZE_CAP.
std::size_t exhaustive_guard(std::size_t fallback);

// Maximum-order distance-d semi-ladder; lexicographically least (a1,b1,a2,b2,...) among maxima.
// Stops early once `cap` is reached.
LadderCertificate max_semi_ladder_exact(const Graph& g, std::uint32_t d,
                                        std::size_t cap = SIZE_MAX);

LadderCertificate greedy_semi_ladder(const Graph& g, std::uint32_t d);

}  // namespace ladderlab
