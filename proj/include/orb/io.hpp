#pragma once

#include <optional>
#include <string>

#include "orb/fatgraph.hpp"

namespace orb {

// Orbifold description file (.orb): `orbifold` header, `inf <I>`,
// `fin <o_0> <o_1> ...` (omitted when there are no finite orders), then
// `order <tok> ...`.  `#` starts a comment.  Serialization is canonical, so
// parse -> serialize -> parse is the identity.
struct OrbFile {
  GenAlphabet alphabet;
  CyclicOrder order;
};

OrbFile parse_orbifold(const std::string& text);
std::string serialize_orbifold(const GenAlphabet& a, const CyclicOrder& order);

// Fatgraph file (.fg): `fatgraph` header, `alphabet inf <I> [fin <o> ...]`,
// optional `order <tok> ...` (carried so a built surface can be checked
// without restating the orbifold), `piece <idx> rect z<i>` /
// `piece <idx> gpoly c<j>` / `piece <idx> poly <tok> ...` with sequential
// indices, then `glue <idx>.<seg> <idx>.<seg>` lines.
struct FgFile {
  Fatgraph graph;
  std::optional<CyclicOrder> order;
};

FgFile parse_fatgraph(const std::string& text);
std::string serialize_fatgraph(const Fatgraph& f,
                               const std::optional<CyclicOrder>& order = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace orb
