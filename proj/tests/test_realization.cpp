#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "orb/realization.hpp"

using namespace orb;

namespace {

Realization make(int inf, std::vector<int> orders, const std::string& order_text) {
  GenAlphabet a{inf, std::move(orders)};
  return Realization::create(a, CyclicOrder(parse_word(order_text, a)));
}

ErrKind kind_of(int inf, std::vector<int> orders, const std::string& order_text) {
  try {
    make(inf, std::move(orders), order_text);
  } catch (const Error& e) {
    return e.kind;
  }
  return ErrKind::Internal;
}

}  // namespace

TEST_CASE("boundary word of the two-handle example") {
  const Realization r = make(2, {4, 4, 4}, "c1 c2 z0 Z1 c0 Z0 z1");
  CHECK(r.boundary_word() ==
        CyclicWord(parse_word("c0 Z0 Z1 c1 c2 z0 z1", r.alphabet())));
  CHECK(word_tokens(r.boundary_rep()) == "z0 z1 c0 Z0 Z1 c1 c2");
}

TEST_CASE("disk boundary is the cone product in order") {
  const Realization r = make(0, {3, 3, 4}, "c0 c1 c2");
  CHECK(word_tokens(r.boundary_rep()) == "c0 c1 c2");
  CHECK(std::holds_alternative<DiskShape>(r.shape()));
  CHECK(std::get<DiskShape>(r.shape()) == DiskShape{{3, 3, 4}});

  const Realization swapped = make(0, {3, 3, 4}, "c1 c0 c2");
  CHECK(word_tokens(swapped.boundary_rep()) == "c0 c2 c1");
}

TEST_CASE("genus one with a cone point") {
  const Realization r = make(2, {3}, "z0 Z1 c0 Z0 z1");
  CHECK(r.boundary_word() ==
        CyclicWord(parse_word("z0 z1 c0 Z0 Z1", r.alphabet())));
  CHECK(std::get<GenusShape>(r.shape()) == GenusShape{1, {3}});

  const auto [plus0, minus0] = r.b_subwords(0);
  CHECK(word_tokens(plus0) == "z1 c0");
  CHECK(word_tokens(minus0) == "Z1");
  const auto [plus1, minus1] = r.b_subwords(1);
  CHECK(word_tokens(plus1) == "c0 Z0");
  CHECK(word_tokens(minus1) == "z0");
  CHECK_THROWS_AS(r.b_subwords(2), Error);
}

TEST_CASE("commutator boundary without cone points") {
  const Realization r = make(2, {}, "z0 Z1 Z0 z1");
  CHECK(word_tokens(r.boundary_rep()) == "z0 z1 Z0 Z1");
  const auto [plus, minus] = r.b_subwords(0);
  CHECK(word_tokens(plus) == "z1");
  CHECK(word_tokens(minus) == "Z1");

  const Realization g2 = make(4, {}, "z0 Z1 Z0 z1 z2 Z3 Z2 z3");
  CHECK(word_tokens(g2.boundary_rep()) == "z0 z1 Z0 Z1 z2 z3 Z2 Z3");
  CHECK(std::get<GenusShape>(g2.shape()) == GenusShape{2, {}});
}

TEST_CASE("creation rejects non-hyperbolic and malformed data") {
  CHECK(kind_of(0, {3, 4}, "c0 c1") == ErrKind::Realization);
  CHECK(kind_of(0, {7}, "c0") == ErrKind::Realization);
  CHECK(kind_of(1, {3}, "z0 Z0 c0") == ErrKind::NonStandardOrder);
  CHECK(kind_of(2, {3}, "z0 Z0 z1 Z1") == ErrKind::Order);      // c0 missing
  CHECK(kind_of(2, {}, "z0 Z0 z1 z1") == ErrKind::Order);       // duplicate
  CHECK(kind_of(2, {3}, "z0 Z1 c0 Z0 z1 c1") == ErrKind::Parse); // unknown symbol
  // interleaved handles split the boundary into several circles
  CHECK(kind_of(2, {}, "z0 Z0 z1 Z1") == ErrKind::Realization);
}

TEST_CASE("shape demands the genus-pair arrangement") {
  const Realization r = make(2, {}, "z0 z1 Z0 Z1");  // one circle, wrong pattern
  CHECK_THROWS_AS(r.shape(), Error);
  try {
    r.shape();
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::NonStandardOrder);
  }
}

TEST_CASE("derived boundary invariants on random realizations") {
  std::mt19937 rng(77130);
  int created = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int inf = 2 * static_cast<int>(rng() % 3);
    const int fin = static_cast<int>(rng() % 4);
    if (inf == 0 && fin < 3) continue;
    std::vector<int> orders;
    for (int j = 0; j < fin; ++j) orders.push_back(2 + static_cast<int>(rng() % 5));
    const GenAlphabet a{inf, orders};
    Word symbols;
    for (int i = 0; i < inf; ++i) {
      symbols.push_back(z(i));
      symbols.push_back(Z(i));
    }
    for (int j = 0; j < fin; ++j) symbols.push_back(c(j));
    std::shuffle(symbols.begin(), symbols.end(), rng);

    std::optional<Realization> r;
    try {
      r.emplace(Realization::create(a, CyclicOrder(symbols)));
    } catch (const Error& e) {
      CHECK(e.kind == ErrKind::Realization);  // several boundary circles
      continue;
    }
    ++created;

    const Word& b = r->boundary_rep();
    CHECK(b.size() == static_cast<std::size_t>(2 * inf + fin));
    CHECK(is_cyclically_reduced(b, a));
    for (long long s : z_exponent_sums(b, a)) CHECK(s == 0);
    for (int j = 0; j < fin; ++j)
      CHECK(std::count(b.begin(), b.end(), c(j)) == 1);
    for (int i = 0; i < inf; ++i) {
      const auto [plus, minus] = r->b_subwords(i);
      CHECK(plus.size() + minus.size() + 2 == b.size());
    }
  }
  CHECK(created > 150);
}

TEST_CASE("classification against the derived boundary") {
  const Realization r = make(2, {4, 4, 4}, "c1 c2 z0 Z1 c0 Z0 z1");
  const GenAlphabet& a = r.alphabet();
  CHECK(r.classify(parse_word("z0", a)) == ElementClass::Hyperbolic);
  CHECK(r.classify(parse_word("c1 c1", a)) == ElementClass::Elliptic);
  CHECK(r.classify(parse_word("c1^4", a)) == ElementClass::Identity);
  CHECK(r.classify(power(r.boundary_rep(), 3)) == ElementClass::Parabolic);
  CHECK(r.classify(inverse(r.boundary_rep(), a)) == ElementClass::Parabolic);
  // conjugates classify like their core
  Word conj = parse_word("z0 c0", a);
  Word w = concat(concat(conj, power(r.boundary_rep(), 2)), inverse(conj, a));
  CHECK(r.classify(w) == ElementClass::Parabolic);
}

TEST_CASE("core graph dot rendering") {
  const Realization disk = make(0, {3, 3, 4}, "c0 c1 c2");
  const std::string d1 = disk.core_graph_dot();
  auto count = [](const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + 1))
      ++n;
    return n;
  };
  CHECK(count(d1, "->") == 3);
  CHECK(count(d1, "shape=") == 4);

  const Realization two = make(2, {4, 4, 4}, "c1 c2 z0 Z1 c0 Z0 z1");
  const std::string d2 = two.core_graph_dot();
  CHECK(count(d2, "->") == 7);
  CHECK(count(d2, "shape=") == 6);
  CHECK(d2 == two.core_graph_dot());
  CHECK(count(d2, "sigma=") == 7);
}
