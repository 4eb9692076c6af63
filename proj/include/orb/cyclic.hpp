#pragma once

#include <vector>

#include "orb/words.hpp"

namespace orb {

// A cyclic arrangement of distinct letters, stored as its least rotation so
// equal cycles compare equal.
class CyclicOrder {
 public:
  explicit CyclicOrder(std::vector<Letter> symbols);

  const std::vector<Letter>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(const Letter& l) const;

  // Index of l in the canonical rotation; throws if absent.
  std::size_t position(const Letter& l) const;

  // True iff starting at x and walking the cycle, y shows up before z.
  // The three letters must be distinct and present.
  bool order_triple(const Letter& x, const Letter& y, const Letter& z) const;

  // The cycle filtered to the given subset, in cycle order (started at the
  // canonical rotation, so equal subsets of equal orders give equal vectors).
  std::vector<Letter> restricted_to(const std::vector<Letter>& subset) const;

  // True iff the cyclic sequence sub (distinct letters, all present) can be
  // read off the cycle in order.  Any sub of size <= 2 fits.  Duplicate or
  // missing letters are an error, not a mismatch.
  bool is_compatible(const std::vector<Letter>& sub) const;

  // Closed arc [from..to] walking the cycle; interval(x, x) == {x}.
  std::vector<Letter> interval(const Letter& from, const Letter& to) const;

  friend bool operator==(const CyclicOrder&, const CyclicOrder&) = default;

 private:
  std::vector<Letter> symbols_;
};

// Equality of vectors as cyclic sequences.
bool same_cycle(const std::vector<Letter>& a, const std::vector<Letter>& b);

}  // namespace orb
