#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/graph.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab {

// Oriented paths from a common root, one per terminal; paths[i] starts at root and ends at terminal i.
struct GeodesicTree {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> paths;
  bool simple = false;

  std::size_t order() const { return paths.size(); }
  friend bool operator==(const GeodesicTree&, const GeodesicTree&) = default;
};

struct QuasiCage {
  LadderCertificate certificate;  // semi-ladder
  Vertex p = 0;
  Vertex q = 0;
  GeodesicTree P;  // simple, rooted at p, avoids q
  GeodesicTree Q;  // rooted at q, avoids p

  std::size_t order() const { return certificate.order(); }
  friend bool operator==(const QuasiCage&, const QuasiCage&) = default;
};

struct Cage {
  QuasiCage qc;

  std::size_t order() const { return qc.order(); }
  friend bool operator==(const Cage&, const Cage&) = default;
};

struct CageReport {
  bool valid = true;
  std::string violation;
};

// Pipeline stages. `kept` lists the 1-based indices of the stage input that survive.
struct REquidistant {
  LadderCertificate certificate;
  Vertex r = 0;
  std::vector<std::size_t> kept;
};

struct SimpleGeodesic {
  LadderCertificate certificate;
  GeodesicTree tree;
  std::vector<std::size_t> kept;
};

struct QEquidistant {
  LadderCertificate certificate;
  GeodesicTree tree;
  Vertex q = 0;
  std::vector<std::size_t> kept;
};

// r = b_1; keeps the largest class of a_2.. by distance to r (ties to the smaller distance).
REquidistant extract_r_equidistant(const Graph& g, const LadderCertificate& cert);
SimpleGeodesic extract_simple_geodesic(const Graph& g, const REquidistant& in);
// nullopt when the root-sum condition fails for the selected class.
std::optional<QEquidistant> extract_q_equidistant(const Graph& g, const SimpleGeodesic& in);
QuasiCage assemble_quasi_cage(const Graph& g, const QEquidistant& in);
Cage extract_cage(const Graph& g, const QuasiCage& qc);

struct CagePipeline {
  std::vector<std::size_t> stage_orders;  // input, R-equidistant, simple geodesic, Q-equidistant
  std::optional<QuasiCage> quasi_cage;
  std::optional<Cage> cage;
};
CagePipeline run_cage_pipeline(const Graph& g, const LadderCertificate& cert);

// Input order that guarantees a quasi-cage of order l: d(dl+2)^d + 1 (saturating).
std::uint64_t quasi_cage_threshold(std::uint32_t d, std::uint64_t l);

CageReport validate_geodesic_tree(const Graph& g, const GeodesicTree& t, std::uint32_t d);
CageReport validate_quasi_cage(const Graph& g, const QuasiCage& qc);
CageReport validate_cage(const Graph& g, const Cage& c);

// Index selection (1-based, strictly ascending), as for ladder_subset.
QuasiCage quasi_cage_subset(const QuasiCage& qc, const std::vector<std::size_t>& indices);
Cage cage_subset(const Cage& c, const std::vector<std::size_t>& indices);

}  // namespace ladderlab
