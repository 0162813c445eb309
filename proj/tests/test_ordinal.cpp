#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace settheory;
using namespace settheory::ord;
using support::Rng;

namespace {

Ordinal O(std::string_view text) { return parse_ordinal(text); }
const Ordinal w = Ordinal::omega();

}  // namespace

TEST_CASE("comparison") {
  CHECK(cmp(w, w) == std::strong_ordering::equal);
  CHECK(O("w+1") < O("w*2"));
  CHECK(O("w^w") > O("w^5*9"));
  CHECK(O("w^(w+1)") > O("w^w*1000"));
  CHECK(Ordinal(3) < w);
  Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    const Ordinal a = rng.ordinal(3);
    const Ordinal b = rng.ordinal(3);
    const Ordinal c = rng.ordinal(3);
    CHECK(((a < b) + (a == b) + (a > b)) == 1);
    if (a < b && b < c) CHECK(a < c);
    // a <= b iff b = a + (b - a) for some remainder
    if (a <= b) CHECK(add(a, lsub(a, b)) == b);
  }
}

TEST_CASE("successor and kind") {
  CHECK(kind(Ordinal{}) == Kind::Zero);
  CHECK(kind(w) == Kind::Limit);
  CHECK(kind(O("w+3")) == Kind::Successor);
  CHECK(succ(O("w*2")) == O("w*2+1"));
  CHECK(succ(Ordinal(4)) == Ordinal(5));
  CHECK(cofinality_class(Ordinal{}) == Cofinality::Zero);
  CHECK(cofinality_class(O("w+1")) == Cofinality::One);
  CHECK(cofinality_class(O("w^w")) == Cofinality::Omega);
}

TEST_CASE("addition") {
  CHECK(add(1, w) == w);
  CHECK(add(w, 1) == O("w+1"));
  CHECK(add(w, 1) != w);
  CHECK(add(0, O("w^2+3")) == O("w^2+3"));
  CHECK(add(O("w^2*3+w*5"), O("w*2")) == O("w^2*3+w*7"));
  CHECK(lsub(O("w^2*3+w*5"), O("w^2*3+w*7")) == O("w*2"));
  CHECK(add(O("w*3+7"), O("w^2")) == O("w^2"));
}

TEST_CASE("left subtraction") {
  const Ordinal a = O("w^3+w");
  CHECK(lsub(a, a).is_zero());
  CHECK(lsub(w, O("w+5")) == 5);
  CHECK(lsub(3, w) == w);
  CHECK_THROWS_AS(lsub(O("w+1"), w), DomainError);
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    Ordinal a1 = rng.ordinal(3);
    Ordinal b1 = rng.ordinal(3);
    if (b1 < a1) std::swap(a1, b1);
    const Ordinal g = lsub(a1, b1);
    CHECK(add(a1, g) == b1);
    // uniqueness: a + g' = b forces g' = g, so neighbours of g fail
    CHECK(add(a1, succ(g)) != b1);
  }
}

TEST_CASE("multiplication") {
  CHECK(mul(w, 2) == add(w, w));
  CHECK(mul(w, 2) == O("w*2"));
  CHECK(mul(2, w) == w);
  CHECK(mul(O("w+2"), w) == O("w^2"));
  CHECK(mul(O("w+2"), 3) == O("w*3+2"));
  const Ordinal a = O("w^w*4+w^3+7");
  CHECK(mul(a, 1) == a);
  CHECK(mul(a, 0).is_zero());
  CHECK(mul(0, a).is_zero());
}

TEST_CASE("division with remainder") {
  const Ordinal b = O("w^2+w*3+2");
  CHECK(divmod(b, 1) == std::pair<Ordinal, Ordinal>{b, 0});
  CHECK(divmod(b, w) == std::pair<Ordinal, Ordinal>{O("w+3"), 2});
  CHECK(divmod(b, b) == std::pair<Ordinal, Ordinal>{1, 0});
  CHECK_THROWS_AS(divmod(b, 0), DomainError);
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Ordinal x = rng.ordinal(3);
    Ordinal a1 = rng.ordinal(3);
    if (a1.is_zero()) a1 = 1;
    auto [q, r] = divmod(x, a1);
    CHECK(add(mul(a1, q), r) == x);
    CHECK(r < a1);
  }
}

TEST_CASE("division is unique on the grid below w*10") {
  std::vector<Ordinal> grid;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) grid.push_back(add(mul(w, i), j));
  }
  for (const auto& a : grid) {
    if (a.is_zero()) continue;
    // Every representation a*g + d with d < a and g, d from the grid.
    std::map<Ordinal, std::vector<std::pair<Ordinal, Ordinal>>> reps;
    for (const auto& g : grid) {
      for (const auto& d : grid) {
        if (d < a) reps[add(mul(a, g), d)].emplace_back(g, d);
      }
    }
    for (const auto& b : grid) {
      auto [q, r] = divmod(b, a);
      const auto& found = reps[b];
      REQUIRE(found.size() == 1);
      CHECK(found[0] == std::pair<Ordinal, Ordinal>{q, r});
    }
  }
}

TEST_CASE("exponentiation") {
  CHECK(opow(2, w) == w);
  CHECK(opow(w, 2) == O("w^2"));
  CHECK(opow(O("w+1"), 2) == O("w^2+w+1"));
  CHECK(opow(O("w+1"), 2) == mul(O("w+1"), O("w+1")));
  CHECK(opow(0, 0) == 1);
  CHECK(opow(0, w).is_zero());
  CHECK(opow(2, O("w+3")) == O("w*8"));
  CHECK(opow(w, w) == O("w^w"));
  CHECK(opow(O("w^2"), w) == O("w^w"));
  CHECK(opow(3, O("w^2")) == O("w^w"));
  Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    const Ordinal a = rng.ordinal(2);
    const Ordinal b = rng.ordinal(2);
    const Ordinal c = rng.ordinal(2);
    if (a > 1 && b < c) CHECK(opow(a, b) < opow(a, c));
    CHECK(opow(a, 1) == a);
    CHECK(opow(a, 2) == mul(a, a));
  }
}

TEST_CASE("natural sum") {
  CHECK(hessenberg(O("w^2*3+w*5+1"), O("w^3*4+w^2*2+3")) == O("w^3*4+w^2*5+w*5+4"));
  const Ordinal a = O("w^w+w");
  CHECK(hessenberg(a, 0) == a);
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Ordinal x = rng.ordinal(3);
    const Ordinal y = rng.ordinal(3);
    const Ordinal z = rng.ordinal(3);
    CHECK(hessenberg(x, y) >= add(x, y));
    CHECK(hessenberg(x, y) == hessenberg(y, x));
    CHECK(hessenberg(hessenberg(x, y), z) == hessenberg(x, hessenberg(y, z)));
  }
}

TEST_CASE("indecomposables") {
  CHECK(is_indecomposable(O("w^w")));
  CHECK(is_indecomposable(1));
  CHECK_FALSE(is_indecomposable(O("w*2")));
  auto d = decomposition(O("w*2"));
  REQUIRE(d);
  CHECK(add(d->first, d->second) == O("w*2"));
  CHECK(d->first < O("w*2"));
  CHECK(d->second < O("w*2"));
  CHECK_FALSE(is_indecomposable(0));
  CHECK_FALSE(decomposition(O("w^3")));
  // Indecomposable: a + b < c for all a, b < c.
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const Ordinal c = rng.ordinal(3);
    if (auto split = decomposition(c)) {
      CHECK(add(split->first, split->second) == c);
      CHECK(split->first < c);
      CHECK(split->second < c);
      CHECK_FALSE(is_indecomposable(c));
    } else if (!c.is_zero()) {
      CHECK(is_indecomposable(c));
    }
  }
}

TEST_CASE("algebra laws on random triples") {
  Rng rng(7);
  for (int t = 0; t < 2000; ++t) {
    const Ordinal a = rng.ordinal(3);
    const Ordinal b = rng.ordinal(3);
    const Ordinal c = rng.ordinal(3);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    if (b < c) {
      CHECK(add(a, b) < add(a, c));
      if (!a.is_zero()) CHECK(mul(a, b) < mul(a, c));
    }
    CHECK(opow(a, add(b, c)) == mul(opow(a, b), opow(a, c)));
    CHECK(opow(a, mul(b, c)) == opow(opow(a, b), c));
  }
}

TEST_CASE("finite ordinals are natural numbers") {
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    const auto x = rng.below(1001);
    const auto y = rng.below(1001);
    CHECK(add(x, y) == Ordinal(x + y));
    CHECK(add(x, y) == add(y, x));
    CHECK(mul(x, y) == Ordinal(x * y));
    CHECK(mul(x, y) == mul(y, x));
    const auto e = rng.below(30);
    BigInt p = 1;
    for (std::uint64_t i = 0; i < e; ++i) p *= x;
    CHECK(opow(x, e) == Ordinal(p));
  }
}

TEST_CASE("Cantor normal form is the value of its own sum") {
  Rng rng(9);
  for (int t = 0; t < 500; ++t) {
    const Ordinal a = rng.ordinal(3);
    Ordinal sum;
    for (const auto& term : a.terms()) {
      // split each coefficient k into 1 + (k-1) to exercise merging
      sum = add(sum, opow(w, term.exponent));
      if (term.coefficient > 1) sum = add(sum, mul(opow(w, term.exponent), Ordinal(BigInt(term.coefficient - 1))));
    }
    CHECK(sum == a);
  }
}

TEST_CASE("printing and parsing") {
  CHECK(to_string(O("w^2*3 + w*5 + 1")) == "w^2*3+w*5+1");
  CHECK(to_string(O("w^(w^w)")) == "w^(w^w)");
  CHECK(to_string(O("w^w^w")) == "w^(w^w)");
  CHECK(to_string(O("w^(w+1)*2")) == "w^(w+1)*2");
  CHECK(to_string(Ordinal{}) == "0");
  CHECK(to_string(w) == "w");
  CHECK(O("(w+1)*(w+1)") == O("w^2+w+1"));
  CHECK_THROWS_AS(O("w+"), SyntaxError);
  CHECK_THROWS_AS(O("w^^2"), SyntaxError);
  Rng rng(10);
  for (int t = 0; t < 2000; ++t) {
    const Ordinal a = rng.ordinal(4, 3, 1'000'000);
    CHECK(parse_ordinal(to_string(a)) == a);
  }
}

TEST_CASE("depth cap") {
  Ordinal a = w;
  for (std::size_t i = 0; i < kMaxDepth; ++i) {
    try {
      a = opow(w, a);
    } catch (const BudgetError&) {
      CHECK(a.depth() == kMaxDepth);
      return;
    }
  }
  FAIL("depth cap never triggered");
}
