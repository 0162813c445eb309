#pragma once

// Random generators and brute-force oracles shared by the unit tests and the
// acceptance runner. The oracles deliberately avoid the library's own
// algorithms: they work from definitions, by saturation or exhaustive search.

#include "settheory/cli.hpp"
#include "settheory/hfset.hpp"
#include "settheory/linorder.hpp"
#include "settheory/numtower.hpp"
#include "settheory/ordinal.hpp"
#include "settheory/surreal.hpp"
#include "settheory/wforder.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace support {

using settheory::BigInt;
using settheory::hf::HFSet;
using settheory::num::Frac;
using settheory::ord::Ordinal;
using settheory::sur::Dyadic;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

  // Depth 1 is a natural; depth d has CNF exponents of depth < d and
  // coefficients in 1..max_coef. Depth <= 3 stays below w^w^w.
  Ordinal ordinal(int depth, std::uint64_t max_terms = 3, std::uint64_t max_coef = 9) {
    if (depth <= 1) return Ordinal(below(max_coef + 1));
    std::set<Ordinal> exps;
    const auto terms = below(max_terms + 1);
    for (std::uint64_t i = 0; i < terms; ++i) exps.insert(ordinal(static_cast<int>(below(static_cast<std::uint64_t>(depth))) , max_terms, max_coef));
    std::vector<Ordinal::Term> t;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) t.push_back({*it, BigInt(1 + below(max_coef))});
    return Ordinal::from_terms(std::move(t));
  }

  HFSet hfset(int rank, std::uint64_t max_width = 3) {
    if (rank <= 0) return settheory::hf::empty();
    std::vector<HFSet> members;
    // Force one member of rank exactly rank-1 half the time.
    if (coin()) members.push_back(hfset_exact(rank - 1, max_width));
    const auto k = below(max_width + 1);
    for (std::uint64_t i = 0; i < k; ++i) members.push_back(hfset(static_cast<int>(below(static_cast<std::uint64_t>(rank))), max_width));
    return HFSet::of(std::move(members));
  }

  HFSet hfset_exact(int rank, std::uint64_t max_width = 3) {
    if (rank <= 0) return settheory::hf::empty();
    std::vector<HFSet> members{hfset_exact(rank - 1, max_width)};
    const auto k = below(max_width);
    for (std::uint64_t i = 0; i < k; ++i) members.push_back(hfset(static_cast<int>(below(static_cast<std::uint64_t>(rank))), max_width));
    return HFSet::of(std::move(members));
  }

  settheory::lin::BinString bits(std::size_t max_len) {
    settheory::lin::BinString s;
    const auto len = below(max_len + 1);
    for (std::uint64_t i = 0; i < len; ++i) s.bits.push_back(coin() ? '1' : '0');
    return s;
  }

  Frac frac(std::int64_t max_abs = 50, std::int64_t max_den = 20) {
    return settheory::num::q_make(between(-max_abs, max_abs), between(1, max_den));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

// --- hereditarily finite sets -------------------------------------------------

// Smallest transitive superset of x, by saturation: T := T u (union T) until
// nothing changes.
inline HFSet tc_by_saturation(const HFSet& x) {
  std::set<HFSet> t(x.elements().begin(), x.elements().end());
  for (;;) {
    std::set<HFSet> next = t;
    for (const auto& m : t) next.insert(m.elements().begin(), m.elements().end());
    if (next.size() == t.size()) break;
    t = std::move(next);
  }
  return HFSet::of({t.begin(), t.end()});
}

// All sets of rank < n, i.e. V_n, built from the definition V_{n+1} = P(V_n)
// by enumerating bit masks.
inline std::vector<HFSet> v_stage_members(std::size_t n) {
  std::vector<HFSet> v;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<HFSet> next;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
      std::vector<HFSet> members;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1U) members.push_back(v[i]);
      }
      next.push_back(HFSet::of(std::move(members)));
    }
    v = std::move(next);
  }
  return v;
}

// --- surreals -------------------------------------------------------------------

// Stage-by-stage construction: day 0 is {0}; each day adds one number below
// the minimum, one above the maximum, and the midpoint of each adjacent pair.
// Returns each number with the day it was born.
inline std::map<Dyadic, std::size_t> birthdays_by_construction(std::size_t days) {
  std::map<Dyadic, std::size_t> born{{Dyadic(0), 0}};
  for (std::size_t d = 1; d <= days; ++d) {
    std::vector<Dyadic> now;
    for (const auto& [x, _] : born) now.push_back(x);
    std::vector<Dyadic> fresh{now.front() - Dyadic(1), now.back() + Dyadic(1)};
    for (std::size_t i = 0; i + 1 < now.size(); ++i) {
      const Dyadic sum = now[i] + now[i + 1];
      fresh.emplace_back(sum.numerator(), sum.log_denominator() + 1);
    }
    for (const auto& x : fresh) born.emplace(x, d);
  }
  return born;
}

// Exact value as a fraction, computed from numerator and denominator only.
inline Frac frac_of(const Dyadic& x) {
  return settheory::num::q_make(settheory::num::ZInt{x.numerator()},
                                settheory::num::ZInt{BigInt(1) << x.log_denominator()});
}

// --- binary strings ---------------------------------------------------------------

// All strings of length <= n, by length then lexicographically.
inline std::vector<settheory::lin::BinString> strings_up_to(std::size_t n) {
  std::vector<settheory::lin::BinString> out{{""}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].bits.size() == n) continue;
    out.push_back({out[i].bits + "0"});
    out.push_back({out[i].bits + "1"});
  }
  return out;
}

// Dyadic position of a string in the tree: "" is 1/2, left child halves the
// step. Strictly monotone for the U-order by construction of the tree.
inline Dyadic tree_position(const settheory::lin::BinString& s) {
  Dyadic x(1, 1);
  for (std::size_t i = 0; i < s.bits.size(); ++i) {
    const Dyadic step(1, i + 2);
    x = s.bits[i] == '1' ? x + step : x - step;
  }
  return x;
}

// --- relations ------------------------------------------------------------------

// Pointwise least strictly increasing map n -> {0..n-1} (edges with x != y
// must go strictly up), by exhaustive search. Empty if none exists.
inline std::optional<std::vector<std::size_t>> least_increasing_map(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> r(n, 0);
  std::optional<std::vector<std::size_t>> best;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = c % n;
      c /= n;
    }
    bool ok = true;
    for (auto [x, y] : edges) {
      if (x != y && r[x] >= r[y]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!best) {
      best = r;
    } else {
      for (std::size_t i = 0; i < n; ++i) (*best)[i] = std::min((*best)[i], r[i]);
    }
  }
  return best;
}

// Cycle through distinct nodes, by Warshall reachability.
inline bool has_proper_cycle(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto [x, y] : edges) {
    if (x != y) reach[x][y] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i][i]) return true;
  }
  return false;
}

// Random injection pair between carriers of equal size n, named x0.. and y0..
inline std::pair<settheory::wf::FinInjection, settheory::wf::FinInjection> random_injections(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::vector<std::size_t> q(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = q[i] = i;
  std::shuffle(p.begin(), p.end(), rng.engine());
  std::shuffle(q.begin(), q.end(), rng.engine());
  settheory::wf::FinInjection f;
  settheory::wf::FinInjection g;
  for (std::size_t i = 0; i < n; ++i) {
    f.forward["x" + std::to_string(i)] = "y" + std::to_string(p[i]);
    g.forward["y" + std::to_string(i)] = "x" + std::to_string(q[i]);
  }
  return {f, g};
}

// Layer of x by chasing preimages: the number of backward steps (g^-1, then
// f^-1, alternately) before the chain leaves the ranges, or nothing if the
// chain returns to x.
inline std::optional<std::size_t> layer_by_preimages(const settheory::wf::FinInjection& f,
                                                     const settheory::wf::FinInjection& g, const std::string& x) {
  std::map<std::string, std::string> f_inv;
  std::map<std::string, std::string> g_inv;
  for (const auto& [a, b] : f.forward) f_inv[b] = a;
  for (const auto& [a, b] : g.forward) g_inv[b] = a;
  std::string cur = x;
  bool in_x = true;
  for (std::size_t steps = 0; steps <= 2 * (f.forward.size() + g.forward.size()) + 2; ++steps) {
    const auto& inv = in_x ? g_inv : f_inv;
    auto it = inv.find(cur);
    if (it == inv.end()) return steps;
    cur = it->second;
    in_x = !in_x;
    if (in_x && cur == x) return std::nullopt;
  }
  return std::nullopt;
}

// Syntax trees over every operator the printer knows.
inline settheory::cli::Expr random_expr(Rng& rng, int depth) {
  using settheory::cli::Expr;
  Expr e;
  const auto pick = depth <= 0 ? rng.below(5) : rng.below(10);
  switch (pick) {
    case 0:
      e.op = Expr::Op::Omega;
      break;
    case 1:
      e.op = Expr::Op::Nat;
      e.num = rng.below(1000);
      break;
    case 2:
      e.op = Expr::Op::Frac;
      e.num = rng.below(50);
      e.den = 1 + rng.below(20);
      break;
    case 3:
      e.op = Expr::Op::Var;
      e.name = rng.coin() ? "x" : "val_2";
      break;
    case 4:
      e.op = Expr::Op::Set;
      if (depth > 0) {
        const auto k = rng.below(3);
        for (std::uint64_t i = 0; i < k; ++i) e.kids.push_back(random_expr(rng, depth - 1));
      }
      break;
    case 5:
      e.op = Expr::Op::Neg;
      e.kids.push_back(random_expr(rng, depth - 1));
      break;
    default: {
      static constexpr Expr::Op ops[] = {Expr::Op::Add, Expr::Op::OPlus, Expr::Op::Mul, Expr::Op::Pow};
      e.op = ops[pick - 6];
      e.kids.push_back(random_expr(rng, depth - 1));
      e.kids.push_back(random_expr(rng, depth - 1));
    }
  }
  return e;
}

}  // namespace support
