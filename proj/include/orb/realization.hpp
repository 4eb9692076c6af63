#pragma once

#include <utility>
#include <variant>

#include "orb/fatgraph.hpp"

namespace orb {

struct DiskShape {
  std::vector<int> orders;
  friend bool operator==(const DiskShape&, const DiskShape&) = default;
};

struct GenusShape {
  int genus;
  std::vector<int> orders;
  friend bool operator==(const GenusShape&, const GenusShape&) = default;
};

using Shape = std::variant<DiskShape, GenusShape>;

// A one-cusped orbifold presented by its generator alphabet and the cyclic
// order of symbols around the fundamental polygon.  The boundary word is
// derived, never supplied: it is read off the standard complex, so it agrees
// with every construction that consumes it.
class Realization {
 public:
  static Realization create(GenAlphabet alphabet, CyclicOrder order);

  const GenAlphabet& alphabet() const { return alphabet_; }
  const CyclicOrder& order() const { return order_; }
  const CyclicWord& boundary_word() const { return b_; }
  const Word& boundary_rep() const { return b_.rep(); }

  Shape shape() const;

  // The two arcs of the boundary word strictly between z_i and its inverse:
  // first reading forward from z_i, then forward from the inverse.
  std::pair<Word, Word> b_subwords(int i) const;

  std::string core_graph_dot() const;

  ElementClass classify(const Word& w) const;

 private:
  Realization(GenAlphabet a, CyclicOrder o, CyclicWord b)
      : alphabet_(std::move(a)), order_(std::move(o)), b_(std::move(b)) {}

  GenAlphabet alphabet_;
  CyclicOrder order_;
  CyclicWord b_;
};

}  // namespace orb
