#include "orb/realization.hpp"

#include <algorithm>
#include <sstream>

namespace orb {

Realization Realization::create(GenAlphabet alphabet, CyclicOrder order) {
  validate_alphabet(alphabet);
  if (alphabet.inf_count == 0 && alphabet.fin_count() < 3)
    fail(ErrKind::Realization,
         "a disk realization needs at least three finite orders to be hyperbolic");
  if (alphabet.inf_count % 2 != 0)
    fail(ErrKind::NonStandardOrder,
         "infinite-order generators must come in genus pairs; got " +
             std::to_string(alphabet.inf_count));

  const std::size_t expected =
      2 * static_cast<std::size_t>(alphabet.inf_count) +
      static_cast<std::size_t>(alphabet.fin_count());
  if (order.size() != expected)
    fail(ErrKind::Order, "order lists " + std::to_string(order.size()) +
                             " symbols, alphabet has " + std::to_string(expected));
  for (int i = 0; i < alphabet.inf_count; ++i) {
    if (!order.contains(z(i)) || !order.contains(Z(i)))
      fail(ErrKind::Order, "order is missing z" + std::to_string(i) + " or its inverse");
  }
  for (int j = 0; j < alphabet.fin_count(); ++j)
    if (!order.contains(c(j)))
      fail(ErrKind::Order, "order is missing c" + std::to_string(j));

  const Fatgraph complex = standard_complex(alphabet, order);
  const BoundaryReport rep = boundary(complex);
  if (rep.components.size() != 1)
    fail(ErrKind::Realization,
         "order yields " + std::to_string(rep.components.size()) +
             " boundary circles; a one-cusped orbifold needs exactly one");
  const Word b = component_word(rep.components[0]);
  if (!is_cyclically_reduced(b, alphabet))
    fail(ErrKind::Realization, "derived boundary word is not cyclically reduced");
  for (int total : z_exponent_sums(b, alphabet))
    if (total != 0)
      fail(ErrKind::Realization, "derived boundary word has nonzero z-exponent sum");

  return Realization(std::move(alphabet), std::move(order), CyclicWord(b));
}

Shape Realization::shape() const {
  if (alphabet_.inf_count == 0) return DiskShape{alphabet_.fin_orders};

  std::vector<Letter> zsyms;
  Word pattern;
  for (int k = 0; 2 * k < alphabet_.inf_count; ++k) {
    zsyms.push_back(z(2 * k));
    zsyms.push_back(Z(2 * k));
    zsyms.push_back(z(2 * k + 1));
    zsyms.push_back(Z(2 * k + 1));
    pattern.push_back(z(2 * k));
    pattern.push_back(Z(2 * k + 1));
    pattern.push_back(Z(2 * k));
    pattern.push_back(z(2 * k + 1));
  }
  if (!same_cycle(order_.restricted_to(zsyms), pattern))
    fail(ErrKind::NonStandardOrder,
         "infinite-order symbols are not arranged in genus-pair form");
  return GenusShape{alphabet_.inf_count / 2, alphabet_.fin_orders};
}

std::pair<Word, Word> Realization::b_subwords(int i) const {
  if (i < 0 || i >= alphabet_.inf_count)
    fail(ErrKind::Alphabet, "no infinite generator z" + std::to_string(i));
  const Word& w = b_.rep();
  const auto at = [&](const Letter& l) {
    const auto it = std::find(w.begin(), w.end(), l);
    if (it == w.end())
      fail(ErrKind::Realization,
           letter_token(l) + " does not occur in the boundary word");
    return static_cast<std::size_t>(it - w.begin());
  };
  const std::size_t p = at(z(i));
  const std::size_t q = at(Z(i));
  const auto between = [&](std::size_t from, std::size_t to) {
    Word out;
    for (std::size_t k = (from + 1) % w.size(); k != to; k = (k + 1) % w.size())
      out.push_back(w[k]);
    return out;
  };
  return {between(p, q), between(q, p)};
}

std::string Realization::core_graph_dot() const {
  std::ostringstream os;
  os << "digraph core {\n";
  os << "  p [shape=point];\n";
  for (int i = 0; i < alphabet_.inf_count; ++i)
    os << "  z" << i << " [shape=box];\n";
  for (int j = 0; j < alphabet_.fin_count(); ++j)
    os << "  c" << j << " [shape=diamond, order=" << alphabet_.order(j) << "];\n";
  const auto arc = [&](const std::string& from, const std::string& to,
                       const Letter& l) {
    os << "  " << from << " -> " << to << " [label=\"" << letter_token(l)
       << "\", sigma=" << order_.position(l) << "];\n";
  };
  for (int i = 0; i < alphabet_.inf_count; ++i) {
    arc("p", "z" + std::to_string(i), z(i));
    arc("z" + std::to_string(i), "p", Z(i));
  }
  for (int j = 0; j < alphabet_.fin_count(); ++j)
    arc("p", "c" + std::to_string(j), c(j));
  os << "}\n";
  return os.str();
}

ElementClass Realization::classify(const Word& w) const {
  return classify_with_boundary(w, alphabet_, b_);
}

}  // namespace orb
