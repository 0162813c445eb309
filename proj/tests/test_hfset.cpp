#include "support.hpp"

#include <doctest.h>

using namespace settheory;
using namespace settheory::hf;
using support::Rng;

namespace {

HFSet S(std::string_view text) { return parse_hfset(text); }

const HFSet zero = empty();
const HFSet one = vn_nat(1);
const HFSet two = vn_nat(2);

}  // namespace

TEST_CASE("pairs and singletons") {
  CHECK(pair(zero, zero) == singleton(zero));
  CHECK(pair(zero, one) == two);
  CHECK(pair(S("{{}}"), S("{{{}}}")) == pair(S("{{{}}}"), S("{{}}")));
  CHECK(kpair(zero, one) == HFSet::of({singleton(zero), pair(zero, one)}));
  const HFSet x = S("{{},{{{}}}}");
  CHECK(kpair(x, x) == singleton(singleton(x)));
  CHECK(triple(zero, one, two) == kpair(kpair(zero, one), two));
}

TEST_CASE("Kuratowski pairs decode uniquely over all sets of rank below 4") {
  const auto v = support::v_stage_members(3);  // rank <= 2, 4 sets
  const auto w = support::v_stage_members(4);  // rank <= 3, 16 sets
  for (const auto& x : w) {
    for (const auto& y : w) {
      auto parts = kpair_parts(kpair(x, y));
      REQUIRE(parts);
      CHECK(parts->first == x);
      CHECK(parts->second == y);
    }
  }
  // Injectivity: distinct argument pairs give distinct pairs.
  std::set<HFSet> seen;
  for (const auto& x : w) {
    for (const auto& y : w) seen.insert(kpair(x, y));
  }
  CHECK(seen.size() == w.size() * w.size());
  CHECK_FALSE(kpair_parts(two));  // {0,1} is not of the form {{a},{a,b}}
  CHECK(v.size() == 4);
}

TEST_CASE("union, power, difference, intersection") {
  CHECK(union_of(singleton(two)) == two);
  const HFSet p = power(two);
  CHECK(p == HFSet::of({zero, singleton(zero), singleton(one), two}));
  CHECK(p.size() == 4);
  const HFSet x = S("{{},{{}},{{{}}}}");
  CHECK(diff(x, x).empty());
  CHECK(inter(x, two) == two);
  CHECK(unite(two, S("{{{{}}}}")).size() == 3);
  CHECK_THROWS_AS(power(vn_nat(30), Budget{1000}), BudgetError);
}

TEST_CASE("power set against mask enumeration") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const HFSet x = rng.hfset(3, 3);
    if (x.size() > 10) continue;
    std::vector<HFSet> subsets;
    const auto members = x.elements();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
      std::vector<HFSet> s;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (mask >> i & 1U) s.push_back(members[i]);
      }
      subsets.push_back(HFSet::of(std::move(s)));
    }
    CHECK(power(x) == HFSet::of(subsets));
  }
}

TEST_CASE("transitive closure") {
  CHECK(tc(S("{{{}}}")) == S("{{{}},{}}"));
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(tc(vn_nat(n)) == vn_nat(n));
    CHECK(is_transitive(vn_nat(n)));
  }
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const HFSet x = rng.hfset(4);
    const HFSet y = rng.hfset(4);
    const HFSet t1 = tc(x);
    CHECK(t1 == support::tc_by_saturation(x));
    CHECK(tc(t1) == t1);
    CHECK(is_transitive(t1));
    CHECK(is_subset(x, t1));
    CHECK(tc(unite(x, y)) == unite(tc(x), tc(y)));
    const HFSet p = kpair(x, y);
    CHECK(is_subset(unite(HFSet::of({singleton(x), pair(x, y)}), tc(unite(x, y))), tc(p)));
  }
}

TEST_CASE("saturation stabilizes within rank steps") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const HFSet x = rng.hfset(5);
    HFSet y = x;
    std::size_t steps = 0;
    while (true) {
      HFSet next = unite(y, union_of(y));
      if (next == y) break;
      y = next;
      ++steps;
    }
    CHECK(steps <= rank_in(x));
    CHECK(y == tc(x));
  }
}

TEST_CASE("von Neumann naturals") {
  CHECK(vn_nat(0).empty());
  CHECK(vn_nat(3) == S("{{},{{}},{{},{{}}}}"));
  CHECK_FALSE(nat_of(S("{{{}}}")));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(nat_of(vn_nat(n)) == n);
  CHECK_FALSE(nat_of(S("{{},{{{}}}}")));
}

TEST_CASE("rank") {
  CHECK(rank_in(zero) == 0);
  CHECK(rank_in(S("{{{}}}")) == 2);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(rank_in(vn_nat(n)) == n);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const HFSet x = rng.hfset(5);
    std::size_t expect = 0;
    for (const auto& e : x.elements()) expect = std::max(expect, rank_in(e) + 1);
    CHECK(rank_in(x) == expect);
    CHECK(x.rank() == expect);
  }
}

TEST_CASE("cumulative hierarchy") {
  const std::vector<int> sizes{0, 1, 2, 4, 16, 65536};
  for (std::size_t n = 0; n < sizes.size(); ++n) CHECK(v_size(n) == sizes[n]);
  CHECK(v_size(6) == BigInt(1) << 65536);
  CHECK(v_stage(2) == two);
  const HFSet v4 = v_stage(4);
  CHECK(v4.size() == 16);
  for (const auto& x : v4.elements()) CHECK(rank_in(x) < 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    const HFSet v = v_stage(n);
    CHECK(v == HFSet::of(support::v_stage_members(n)));
    for (const auto& x : v.elements()) CHECK(rank_in(x) < n);
  }
  CHECK_THROWS_AS(v_stage(5), BudgetError);
}

TEST_CASE("Goedel operations") {
  CHECK(goedel_op(2, zero, one) == two);
  CHECK(goedel_op(3, two, two) == singleton(kpair(zero, one)));
  const HFSet a = S("{{}}");
  const HFSet b = S("{{{}}}");
  const HFSet c = S("{{},{{}}}");
  CHECK(goedel_op(8, singleton(triple(a, b, c)), zero) == singleton(triple(c, a, b)));
  CHECK(goedel_op(0, a, b) == a);
  CHECK(goedel_op(1, c, a) == singleton(a));
  CHECK(goedel_op(7, c, zero) == one);
  const HFSet rel = HFSet::of({kpair(a, b), kpair(b, c), two});  // `two` is not a pair and is skipped
  CHECK(goedel_op(4, rel, zero) == HFSet::of({kpair(b, a), kpair(c, b)}));
  CHECK(goedel_op(5, rel, zero) == HFSet::of({a, b}));
  // rng as dom of the inverse
  CHECK(goedel_op(5, goedel_op(4, rel, zero), zero) == HFSet::of({b, c}));
  CHECK(goedel_op(6, two, one) == HFSet::of({kpair(zero, zero), kpair(one, zero)}));
  CHECK_THROWS_AS(goedel_op(9, a, b), DomainError);
}

TEST_CASE("Goedel extension and hull") {
  CHECK(goedel_ext(zero).empty());
  const HFSet e = goedel_ext(one);
  // The only argument pair is (0,0), so G_2 yields {0} = 1; 2 = {0,1} takes a
  // second round.
  CHECK(e == HFSet::of({zero, one}));
  CHECK_FALSE(e.contains(two));
  CHECK(goedel_hull(one, 2).contains(two));
  const HFSet x = S("{{},{{}}}");
  CHECK(goedel_ext(x).contains(pair(zero, one)));
  CHECK(goedel_hull(x, 0) == x);
  HFSet prev = x;
  for (std::size_t n = 1; n <= 2; ++n) {
    const HFSet h = goedel_hull(x, n);
    CHECK(is_subset(prev, h));
    prev = h;
  }
  CHECK_THROWS_AS(goedel_hull(x, 4, Budget{1000}), BudgetError);
}

TEST_CASE("Goedel trees") {
  const HFSet a = S("{{}}");
  const HFSet b = S("{{{}}}");
  CHECK(goedel_tree_eval(GoedelTree(0, {}), std::vector<HFSet>{a}) == a);
  CHECK(goedel_tree_eval(GoedelTree(1, {2}), std::vector<HFSet>{a, b}) == pair(a, b));
  CHECK_THROWS_AS(goedel_tree_eval(GoedelTree(1, {2}), std::vector<HFSet>{a}), DomainError);
  // Height 2: G_6(G_2(x0,x1), G_1(x2,x3)).
  const GoedelTree t(2, {6, 2, 1});
  CHECK(t.label("") == 6);
  CHECK(t.label("0") == 2);
  CHECK(t.label("1") == 1);
  CHECK(t.subtree(1).labels()[0] == 1);
  const std::vector<HFSet> args{a, b, two, one};
  CHECK(goedel_tree_eval(t, args) == product(pair(a, b), diff(two, one)));
  CHECK(GoedelTree::labeling_count(2) == 729);
}

TEST_CASE("Goedel extension equals the union over labeled trees of height 1") {
  const auto pool = support::v_stage_members(3);
  std::vector<HFSet> xs{zero};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    xs.push_back(singleton(pool[i]));
    for (std::size_t j = i + 1; j < pool.size(); ++j) xs.push_back(pair(pool[i], pool[j]));
  }
  for (const auto& x : xs) {
    std::vector<HFSet> out;
    for (int l = 0; l < 9; ++l) {
      for (const auto& u : x.elements()) {
        for (const auto& v : x.elements()) {
          const std::vector<HFSet> tuple{u, v};
          out.push_back(goedel_tree_eval(GoedelTree(1, {static_cast<std::uint8_t>(l)}), tuple));
        }
      }
    }
    CHECK(HFSet::of(out) == goedel_ext(x));
  }
}

TEST_CASE("Cantor diagonal") {
  CHECK(cantor_diagonal({}, zero).empty());
  const std::map<HFSet, HFSet> id{{zero, singleton(zero)}, {one, singleton(one)}};
  const HFSet d = cantor_diagonal(id, two);
  CHECK(d.empty());
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const HFSet x = vn_nat(n);
    std::map<HFSet, HFSet> f;
    for (const auto& z : x.elements()) {
      std::vector<HFSet> s;
      for (const auto& w : x.elements()) {
        if (rng.coin()) s.push_back(w);
      }
      f[z] = HFSet::of(std::move(s));
    }
    const HFSet a = cantor_diagonal(f, x);
    CHECK(is_subset(a, x));
    for (const auto& [_, v] : f) CHECK(v != a);
  }
  CHECK_THROWS_AS(cantor_diagonal({{zero, two}}, one), PreconditionError);
}

TEST_CASE("Ackermann coding") {
  CHECK(ackermann_encode(zero) == 0);
  CHECK(ackermann_encode(one) == 1);
  CHECK(ackermann_encode(S("{{{}}}")) == 2);
  CHECK(ackermann_encode(two) == 3);
  const auto v4 = support::v_stage_members(4);
  const auto v5 = v_stage(4);  // rank <= 3
  for (const auto& x : v5.elements()) CHECK(ackermann_decode(ackermann_encode(x)) == x);
  // Rank 4: all 65536 subsets of V_4, via their codes.
  for (std::uint32_t n = 0; n < 65536; ++n) {
    const HFSet x = ackermann_decode(n);
    REQUIRE(ackermann_encode(x) == n);
    CHECK(rank_in(x) <= 4);
  }
  // The element order is ascending code order, and set order matches code order.
  Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    const HFSet x = rng.hfset(4);
    const HFSet y = rng.hfset(4);
    const BigInt cx = ackermann_encode(x);
    const BigInt cy = ackermann_encode(y);
    CHECK(((x < y) == (cx < cy)));
    CHECK(((x == y) == (cx == cy)));
    auto members = x.elements();
    for (std::size_t i = 1; i < members.size(); ++i) CHECK(ackermann_encode(members[i - 1]) < ackermann_encode(members[i]));
  }
  CHECK(v4.size() == 16);
}

TEST_CASE("text form") {
  CHECK(to_string(zero) == "{}");
  CHECK(to_string(two) == "{{},{{}}}");
  CHECK(parse_hfset(" { {} , { { } } } ") == two);
  CHECK(parse_hfset("{{},{}}") == one);
  CHECK_THROWS_AS(parse_hfset("{{}"), SyntaxError);
  CHECK_THROWS_AS(parse_hfset("{x}"), SyntaxError);
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const HFSet x = rng.hfset(5);
    CHECK(parse_hfset(to_string(x)) == x);
  }
}
