#pragma once

#include <array>

#include "orb/realization.hpp"

namespace orb {

enum class PolyStatus { Pass, NotSmall, Incompatible };

struct PolygonResult {
  int piece;
  PolyStatus status;
  Letter repeated{};                  // set when NotSmall
  std::array<Letter, 3> witness{};    // set when Incompatible
};

struct BoundaryResult {
  Word word;  // component read-as-word, canonical rotation
  ElementClass cls;
};

struct CertificateReport {
  bool pass;
  std::vector<PolygonResult> polygons;     // one per Polygon piece, by index
  std::vector<BoundaryResult> boundaries;  // in boundary() component order
};

// Pass iff every polygon has pairwise-distinct edge labels arranged
// compatibly with the realization's cyclic order, and every boundary circle
// classifies as hyperbolic.  The fatgraph must be complete and valid.
CertificateReport check_certificate(const Fatgraph& f, const Realization& r);

// One line per polygon, one per boundary circle, and a final verdict:
//   polygon <idx> pass|notsmall:<label>|incompat:<x>,<y>,<z>
//   boundary <idx> <class> <word tokens>
//   certificate: PASS|FAIL
std::string certificate_lines(const CertificateReport& rep);

}  // namespace orb
