#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "orb/cyclic.hpp"

using namespace orb;

namespace {

// every positively oriented triple of sub must be positively oriented in o
bool compatible_by_triples(const CyclicOrder& o, const std::vector<Letter>& sub) {
  const std::size_t n = sub.size();
  if (n <= 2) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const std::size_t rj = (j + n - i) % n;
        const std::size_t rk = (k + n - i) % n;
        const bool pos_in_sub = rj < rk;
        if (pos_in_sub != o.order_triple(sub[i], sub[j], sub[k])) return false;
      }
  return true;
}

std::vector<Letter> shuffled_symbols(std::mt19937_64& rng, int nz, int nc) {
  std::vector<Letter> s;
  for (int i = 0; i < nz; ++i) {
    s.push_back(z(i));
    s.push_back(Z(i));
  }
  for (int j = 0; j < nc; ++j) s.push_back(c(j));
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

}  // namespace

TEST_CASE("canonical rotation starts at the least letter") {
  CyclicOrder o({c(1), z(0), c(0)});
  CHECK(o.symbols() == std::vector<Letter>{z(0), c(0), c(1)});
  CHECK(o == CyclicOrder({c(0), c(1), z(0)}));
  CHECK(o != CyclicOrder({c(1), c(0), z(0)}));
}

TEST_CASE("rejects duplicates and unknown letters") {
  CHECK_THROWS_AS(CyclicOrder({z(0), z(0)}), Error);
  CHECK_THROWS_AS(CyclicOrder({}), Error);
  CyclicOrder o({z(0), Z(0), c(0)});
  CHECK_THROWS_AS(o.position(c(1)), Error);
  CHECK_THROWS_AS(o.is_compatible({z(0), c(1)}), Error);
  CHECK_THROWS_AS(o.is_compatible({z(0), z(0), c(0)}), Error);
  CHECK_THROWS_AS(o.order_triple(z(0), z(0), c(0)), Error);
}

TEST_CASE("order_triple, pinned") {
  CyclicOrder o({z(0), Z(0), c(0), c(1)});
  CHECK(o.order_triple(z(0), Z(0), c(0)));
  CHECK_FALSE(o.order_triple(z(0), c(0), Z(0)));
  CHECK(o.order_triple(c(1), z(0), c(0)));
  CHECK(o.order_triple(c(0), c(1), z(0)));
}

TEST_CASE("order_triple is a cyclic orientation") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    CyclicOrder o(shuffled_symbols(rng, 2, 3));
    std::vector<Letter> s = o.symbols();
    std::shuffle(s.begin(), s.end(), rng);
    const Letter x = s[0], y = s[1], w = s[2];
    CHECK(o.order_triple(x, y, w) != o.order_triple(x, w, y));
    CHECK(o.order_triple(x, y, w) == o.order_triple(y, w, x));
    CHECK(o.order_triple(x, y, w) == o.order_triple(w, x, y));
  }
}

TEST_CASE("compatibility agrees with the all-triples test") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 300; ++it) {
    CyclicOrder o(shuffled_symbols(rng, 2, 4));
    std::vector<Letter> sub = o.symbols();
    std::shuffle(sub.begin(), sub.end(), rng);
    std::uniform_int_distribution<std::size_t> len(1, sub.size());
    sub.resize(len(rng));
    CHECK(o.is_compatible(sub) == compatible_by_triples(o, sub));
  }
}

TEST_CASE("compatibility, pinned") {
  CyclicOrder o({z(0), Z(0), c(0), c(1), c(2)});
  CHECK(o.is_compatible({Z(0), c(1), z(0)}));       // a rotation of a sub-cycle
  CHECK(o.is_compatible({c(2), z(0)}));             // pairs always fit
  CHECK(o.is_compatible({c(1)}));
  CHECK_FALSE(o.is_compatible({c(2), c(1), c(0)})); // reversed
  CHECK(o.is_compatible({c(0), c(1), c(2)}));
}

TEST_CASE("interval walks the cycle inclusively") {
  CyclicOrder o({z(0), Z(0), c(0), c(1)});
  CHECK(o.interval(c(0), z(0)) == std::vector<Letter>{c(0), c(1), z(0)});
  CHECK(o.interval(z(0), z(0)) == std::vector<Letter>{z(0)});
  CHECK(o.interval(Z(0), c(1)) == std::vector<Letter>{Z(0), c(0), c(1)});
  CHECK(o.interval(z(0), c(1)).size() == 4);
  CHECK(o.interval(Z(0), z(0)).size() == 4);
}

TEST_CASE("restriction keeps cycle order") {
  CyclicOrder o({c(1), z(0), c(0), Z(0)});  // canonical: z0 c0 Z0 c1
  CHECK(o.restricted_to({c(0), c(1)}) == std::vector<Letter>{c(0), c(1)});
  CHECK(o.restricted_to({Z(0), z(0)}) == std::vector<Letter>{z(0), Z(0)});
  CHECK(same_cycle({z(0), c(0), c(1)}, {c(1), z(0), c(0)}));
  CHECK_FALSE(same_cycle({z(0), c(0), c(1)}, {z(0), c(1), c(0)}));
}
