#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orb/error.hpp"

namespace orb {

// Generating data for a free product of inf_count copies of Z (generators z_i)
// and one finite cyclic factor of order fin_orders[j] >= 2 per entry
// (generators c_j).
struct GenAlphabet {
  int inf_count = 0;
  std::vector<int> fin_orders;

  int fin_count() const { return static_cast<int>(fin_orders.size()); }
  int order(int j) const { return fin_orders.at(static_cast<std::size_t>(j)); }

  friend bool operator==(const GenAlphabet&, const GenAlphabet&) = default;
};

// Throws unless every o_j >= 2 and there is at least one generator.
void validate_alphabet(const GenAlphabet& a);

// A single letter: z_i^{±1} or c_j.  Finite letters always carry sign +1;
// c_j^{-1} is spelled as o_j - 1 repeated letters.
struct Letter {
  bool finite = false;
  int index = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;

  // z0 < z0^{-1} < z1 < z1^{-1} < ... < c0 < c1 < ...
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto cmp = a.finite <=> b.finite; cmp != 0) return cmp;
    if (auto cmp = a.index <=> b.index; cmp != 0) return cmp;
    return (a.sign < 0) <=> (b.sign < 0);
  }
};

inline Letter z(int i) { return Letter{false, i, +1}; }
inline Letter Z(int i) { return Letter{false, i, -1}; }
inline Letter c(int j) { return Letter{true, j, +1}; }

using Word = std::vector<Letter>;

// Rejects letters outside the alphabet or finite letters with sign != +1.
void validate_letters(const Word& w, const GenAlphabet& a);

bool is_reduced(const Word& w, const GenAlphabet& a);
bool is_cyclically_reduced(const Word& w, const GenAlphabet& a);

// Reduced form: no z_i^{s} z_i^{-s} adjacencies and every c_j run < o_j.
Word free_reduce(const Word& w, const GenAlphabet& a);

// Inverse of the free reduction of w; the result is reduced.
Word inverse(const Word& w, const GenAlphabet& a);

// w concatenated k times (k >= 0).
Word power(const Word& w, int k);

Word concat(const Word& a, const Word& b);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // free_reduce(w) == conjugator · core · conjugator^{-1}
};
CyclicReduction cyclic_reduce(const Word& w, const GenAlphabet& a);

// Index of the lexicographically least rotation (Booth's algorithm).
template <class T>
std::size_t least_rotation_index(const std::vector<T>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return 0;
  auto at = [&](std::size_t x) -> const T& { return v[x % n]; };
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const T& sj = at(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && !(sj == at(k + static_cast<std::size_t>(i + 1)))) {
      if (sj < at(k + static_cast<std::size_t>(i + 1)))
        k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && !(sj == at(k))) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

template <class T>
std::vector<T> least_rotation(std::vector<T> v) {
  const std::size_t k = least_rotation_index(v);
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v;
}

// A word considered up to rotation; stores the least rotation.  The raw
// constructor does not reduce anything, so distinct group elements stay
// distinct exactly when their letter cycles differ.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(Word cycle) : rep_(least_rotation(std::move(cycle))) {}

  // Cyclic reduction of w, then rotation-canonical.
  static CyclicWord reduced(const Word& w, const GenAlphabet& a) {
    return CyclicWord(cyclic_reduce(w, a).core);
  }

  const Word& rep() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word rep_;
};

// Signed count of z_i letters per i.
std::vector<long long> z_exponent_sums(const Word& w, const GenAlphabet& a);

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };

// Conjugacy-class type of w relative to the cusp word b: Identity when the
// cyclic reduction is empty, Elliptic when it is a power of a single c_j,
// Parabolic when it is b^k or the reduction of b^{-k} (k >= 1), Hyperbolic
// otherwise.  b must be nonempty and cyclically reduced.
ElementClass classify_with_boundary(const Word& w, const GenAlphabet& a,
                                    const CyclicWord& b);

const char* element_class_name(ElementClass k);

// Token text: "z0", "Z0" (= z0^{-1}), "c1"; runs collapse to "c1^2".
std::string letter_token(const Letter& l);
std::string word_tokens(const Word& w);

// Whitespace-separated tokens; c exponents are taken mod o_j, negative z
// exponents flip the sign.  "z0 c0^2 Z1" and "c0^-1" are both fine.
Word parse_word(std::string_view text, const GenAlphabet& a);

}  // namespace orb
