#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "orb/certificate.hpp"
#include "orb/io.hpp"

using namespace orb;

namespace {

Realization triangle_333() {
  GenAlphabet a{0, {3, 3, 3}};
  return Realization::create(a, CyclicOrder(parse_word("c0 c1 c2", a)));
}

// two triangles in cycle order plus one reversed, closed up by one group
// polygon per cone class
Fatgraph closed_with_reversed_triangle(bool polygons_first) {
  const GenAlphabet a{0, {3, 3, 3}};
  Fatgraph f(a);
  int p1, p2, p3, g0, g1, g2;
  if (polygons_first) {
    p1 = f.add_polygon(parse_word("c0 c1 c2", a));
    p2 = f.add_polygon(parse_word("c0 c1 c2", a));
    p3 = f.add_polygon(parse_word("c2 c1 c0", a));
    g0 = f.add_group_polygon(0);
    g1 = f.add_group_polygon(1);
    g2 = f.add_group_polygon(2);
  } else {
    g0 = f.add_group_polygon(0);
    g1 = f.add_group_polygon(1);
    g2 = f.add_group_polygon(2);
    p3 = f.add_polygon(parse_word("c2 c1 c0", a));
    p1 = f.add_polygon(parse_word("c0 c1 c2", a));
    p2 = f.add_polygon(parse_word("c0 c1 c2", a));
  }
  f.glue({g0, 1}, {p1, 0});
  f.glue({g0, 3}, {p2, 0});
  f.glue({g0, 5}, {p3, 2});
  f.glue({g1, 1}, {p1, 1});
  f.glue({g1, 3}, {p2, 1});
  f.glue({g1, 5}, {p3, 1});
  f.glue({g2, 1}, {p1, 2});
  f.glue({g2, 3}, {p2, 2});
  f.glue({g2, 5}, {p3, 0});
  return f;
}

}  // namespace

TEST_CASE("a reversed triangle breaks compatibility") {
  const Realization r = triangle_333();
  const Fatgraph f = closed_with_reversed_triangle(true);
  REQUIRE(f.complete());
  REQUIRE(validate(f).empty());

  const CertificateReport rep = check_certificate(f, r);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.polygons.size() == 3);
  CHECK(rep.polygons[0].status == PolyStatus::Pass);
  CHECK(rep.polygons[1].status == PolyStatus::Pass);
  CHECK(rep.polygons[2].status == PolyStatus::Incompatible);
  CHECK(rep.polygons[2].witness == std::array<Letter, 3>{c(2), c(1), c(0)});

  const std::string lines = certificate_lines(rep);
  CHECK(lines.find("polygon 2 incompat:c2,c1,c0") != std::string::npos);
  CHECK(lines.rfind("certificate: FAIL\n") == lines.size() - 18);
}

TEST_CASE("the seven-polygon fixture passes") {
  const OrbFile orb = parse_orbifold(read_file(FIXTURE_DIR "/example22.orb"));
  const Realization r = Realization::create(orb.alphabet, orb.order);
  const FgFile fg = parse_fatgraph(read_file(FIXTURE_DIR "/fig_spine.fg"));

  const CertificateReport rep = check_certificate(fg.graph, r);
  CHECK(rep.pass);
  REQUIRE(rep.polygons.size() == 7);
  for (const auto& p : rep.polygons) CHECK(p.status == PolyStatus::Pass);
  for (const auto& b : rep.boundaries) CHECK(b.cls == ElementClass::Hyperbolic);

  CensusReport cen = census(fg.graph);
  CHECK(cen.rectangles == std::map<int, int>{{0, 3}, {1, 2}});
  CHECK(cen.group_polygons == std::map<int, int>{{0, 1}, {1, 1}});
  CHECK(cen.polygons_by_size == std::map<int, int>{{2, 4}, {3, 2}, {4, 1}});
}

TEST_CASE("the verdict ignores piece numbering") {
  const Realization r = triangle_333();
  const CertificateReport rep1 =
      check_certificate(closed_with_reversed_triangle(true), r);
  const CertificateReport rep2 =
      check_certificate(closed_with_reversed_triangle(false), r);
  CHECK(rep1.pass == rep2.pass);
  auto statuses = [](const CertificateReport& rep) {
    std::vector<int> out;
    for (const auto& p : rep.polygons) out.push_back(static_cast<int>(p.status));
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(statuses(rep1) == statuses(rep2));
}

TEST_CASE("parabolic boundary circles fail the certificate") {
  const GenAlphabet a{2, {4, 4, 4}};
  const Realization r =
      Realization::create(a, CyclicOrder(parse_word("c1 c2 z0 Z1 c0 Z0 z1", a)));
  const Fatgraph sheet = standard_complex(a, r.order());

  Fatgraph f(a);
  for (int k = 0; k < 4; ++k) f.append_copy(sheet);
  for (int j = 0; j < 3; ++j) {
    const int g = f.add_group_polygon(j);
    const int pos = static_cast<int>(r.order().position(c(j)));
    for (int k = 0; k < 4; ++k) f.glue({g, 2 * k + 1}, {3 * k, pos});
  }
  REQUIRE(f.complete());
  REQUIRE(validate(f).empty());
  CHECK(covers(boundary(f), r.boundary_word()) == 4);

  const CertificateReport rep = check_certificate(f, r);
  CHECK_FALSE(rep.pass);
  for (const auto& p : rep.polygons) CHECK(p.status == PolyStatus::Pass);
  REQUIRE(!rep.boundaries.empty());
  for (const auto& b : rep.boundaries) CHECK(b.cls == ElementClass::Parabolic);
}

TEST_CASE("repeated labels are reported as not small") {
  const GenAlphabet a{2, {4}};
  const Realization r =
      Realization::create(a, CyclicOrder(parse_word("z0 Z1 c0 Z0 z1", a)));
  Fatgraph f(a);
  const int P = f.add_polygon(parse_word("c0 z0 c0 z1", a));
  const int Q = f.add_polygon(parse_word("Z0 Z1 c0 c0", a));
  const int r0 = f.add_rectangle(0);
  const int r1 = f.add_rectangle(1);
  const int g0 = f.add_group_polygon(0);
  f.glue({P, 1}, {r0, 3});
  f.glue({Q, 0}, {r0, 1});
  f.glue({P, 3}, {r1, 3});
  f.glue({Q, 1}, {r1, 1});
  f.glue({g0, 1}, {P, 0});
  f.glue({g0, 3}, {P, 2});
  f.glue({g0, 5}, {Q, 2});
  f.glue({g0, 7}, {Q, 3});
  REQUIRE(f.complete());
  REQUIRE(validate(f).empty());

  const CertificateReport rep = check_certificate(f, r);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.polygons.size() == 2);
  CHECK(rep.polygons[0].status == PolyStatus::NotSmall);
  CHECK(rep.polygons[0].repeated == c(0));
  CHECK(rep.polygons[1].status == PolyStatus::NotSmall);
  CHECK(certificate_lines(rep).find("notsmall:c0") != std::string::npos);
}

TEST_CASE("preconditions are enforced") {
  const GenAlphabet a{2, {4, 4, 4}};
  const Realization r =
      Realization::create(a, CyclicOrder(parse_word("c1 c2 z0 Z1 c0 Z0 z1", a)));

  auto kind_of = [&](const Fatgraph& f) {
    try {
      check_certificate(f, r);
    } catch (const Error& e) {
      return e.kind;
    }
    return ErrKind::Internal;
  };

  CHECK(kind_of(standard_complex(a, r.order())) == ErrKind::Incomplete);

  Fatgraph invalid(a);
  const int b1 = invalid.add_polygon(parse_word("z0 Z0", a));
  const int b2 = invalid.add_polygon(parse_word("z0 Z0", a));
  invalid.glue({b1, 0}, {b2, 1});
  invalid.glue({b1, 1}, {b2, 0});
  CHECK(kind_of(invalid) == ErrKind::Gluing);

  Fatgraph other({1, {}});
  other.add_rectangle(0);
  CHECK(kind_of(other) == ErrKind::Alphabet);
}

TEST_CASE("compatibility matches the all-rotations oracle") {
  std::mt19937 rng(909714);
  const GenAlphabet a{2, {4, 4, 4}};
  Word symbols = parse_word("z0 Z0 z1 Z1 c0 c1 c2", a);
  for (int trial = 0; trial < 300; ++trial) {
    std::shuffle(symbols.begin(), symbols.end(), rng);
    const CyclicOrder order(symbols);
    Word sub = symbols;
    std::shuffle(sub.begin(), sub.end(), rng);
    sub.resize(3 + rng() % 5);

    bool triples_ok = true;
    for (std::size_t i = 0; i < sub.size() && triples_ok; ++i)
      for (std::size_t j = i + 1; j < sub.size() && triples_ok; ++j)
        for (std::size_t k = j + 1; k < sub.size(); ++k)
          if (!order.order_triple(sub[i], sub[j], sub[k])) {
            triples_ok = false;
            break;
          }
    CHECK(triples_ok == order.is_compatible(sub));
  }
}
