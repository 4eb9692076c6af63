#include "orb/certificate.hpp"

#include <sstream>

namespace orb {

CertificateReport check_certificate(const Fatgraph& f, const Realization& r) {
  if (!(f.alphabet() == r.alphabet()))
    fail(ErrKind::Alphabet, "fatgraph and realization use different alphabets");
  if (!f.complete())
    fail(ErrKind::Incomplete, "certificate requires every edge glued");
  const auto violations = validate(f);
  if (!violations.empty())
    fail(ErrKind::Gluing, "fatgraph is not valid: " + violations.front().message);

  CertificateReport rep;
  rep.pass = true;

  for (int p = 0; p < f.piece_count(); ++p) {
    const Piece& pc = f.piece(p);
    if (pc.kind != PieceKind::Polygon) continue;
    Word labels;
    for (const Seg& s : pc.segs) labels.push_back(s.label);

    PolygonResult res{p, PolyStatus::Pass, {}, {}};
    bool small = true;
    for (std::size_t i = 0; i < labels.size() && small; ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) {
          res.status = PolyStatus::NotSmall;
          res.repeated = labels[i];
          small = false;
          break;
        }
    if (small && labels.size() >= 3) {
      const std::size_t n = labels.size();
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          for (std::size_t k = j + 1; k < n; ++k)
            if (!r.order().order_triple(labels[i], labels[j], labels[k])) {
              res.status = PolyStatus::Incompatible;
              res.witness = {labels[i], labels[j], labels[k]};
              ok = false;
              break;
            }
    }
    if (res.status != PolyStatus::Pass) rep.pass = false;
    rep.polygons.push_back(res);
  }

  const BoundaryReport bd = boundary(f);
  for (const auto& comp : bd.components) {
    BoundaryResult res;
    res.word = component_word(comp);
    res.cls = r.classify(res.word);
    if (res.cls != ElementClass::Hyperbolic) rep.pass = false;
    rep.boundaries.push_back(std::move(res));
  }
  if (bd.ghost_cycles > 0) rep.pass = false;  // unreachable once validated

  return rep;
}

std::string certificate_lines(const CertificateReport& rep) {
  std::ostringstream os;
  for (const PolygonResult& pr : rep.polygons) {
    os << "polygon " << pr.piece << ' ';
    switch (pr.status) {
      case PolyStatus::Pass: os << "pass"; break;
      case PolyStatus::NotSmall:
        os << "notsmall:" << letter_token(pr.repeated);
        break;
      case PolyStatus::Incompatible:
        os << "incompat:" << letter_token(pr.witness[0]) << ','
           << letter_token(pr.witness[1]) << ',' << letter_token(pr.witness[2]);
        break;
    }
    os << "\n";
  }
  for (std::size_t i = 0; i < rep.boundaries.size(); ++i)
    os << "boundary " << i << ' ' << element_class_name(rep.boundaries[i].cls)
       << ' ' << word_tokens(rep.boundaries[i].word) << "\n";
  os << "certificate: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace orb
