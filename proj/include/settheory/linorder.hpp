#pragma once

#include "settheory/errors.hpp"
#include "settheory/numtower.hpp"
#include "settheory/surreal.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace settheory::lin {

// A finite strict linear order given by its carrier in ascending order.
template <class Label>
struct FinOrder {
  std::vector<Label> carrier;
};

// A cut (left, right): left is a down-set, right its complement.
template <class Label>
struct Cut {
  std::vector<Label> left;
  std::vector<Label> right;
};

// The |L|+1 cuts of L in left-set inclusion order.
template <class Label>
std::vector<Cut<Label>> cuts(const FinOrder<Label>& order) {
  const auto& c = order.carrier;
  std::vector<Cut<Label>> out;
  out.reserve(c.size() + 1);
  for (std::size_t k = 0; k <= c.size(); ++k) {
    out.push_back({{c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k)},
                   {c.begin() + static_cast<std::ptrdiff_t>(k), c.end()}});
  }
  return out;
}

// Xi(L): the old elements together with one new element per cut, where a cut
// sits above its left side and below its right side. `make_label` names the
// new elements and must not reuse an old label.
template <class Label, class MakeLabel>
FinOrder<Label> cut_extend(const FinOrder<Label>& order, MakeLabel make_label) {
  FinOrder<Label> out;
  out.carrier.reserve(2 * order.carrier.size() + 1);
  auto all = cuts(order);
  for (std::size_t k = 0; k < all.size(); ++k) {
    out.carrier.push_back(make_label(std::as_const(all[k])));
    if (k < order.carrier.size()) out.carrier.push_back(order.carrier[k]);
  }
  return out;
}

// Cut elements labeled "(l1,l2|r1)".
FinOrder<std::string> cut_extend(const FinOrder<std::string>& order);

// n-fold cut extension of the empty order, each new element labeled by the
// simplest dyadic between its sides. Stage n holds 2^n - 1 elements.
FinOrder<sur::Dyadic> surreal_stage(std::size_t n);

// --- the universal order on binary strings -----------------------------------

struct BinString {
  std::string bits;  // over '0' and '1'

  friend bool operator==(const BinString&, const BinString&) = default;
};

// f < g iff g = f.1.., or f = g.0.., or at the first difference f has 0.
// This is the in-order of the infinite binary tree.
std::strong_ordering u_cmp(const BinString& f, const BinString& g);
inline bool u_less(const BinString& f, const BinString& g) { return u_cmp(f, g) < 0; }

// The shortest z with a < z < b elementwise (unique: the shallowest tree node
// in the open interval). Throws PreconditionError unless every element of a
// lies below every element of b.
BinString insert_between(std::span<const BinString> a, std::span<const BinString> b);

// Digits as text; the empty string prints as "".
std::string to_string(const BinString& s);
// Accepts the printed form, optionally wrapped in double quotes.
BinString parse_binstring(std::string_view text);

// --- back-and-forth ----------------------------------------------------------

// A countable strict linear order presented by an enumeration, its order, and
// a witness: given optional bounds lo < hi, some element strictly between (or
// nothing if the order cannot supply one).
template <class T>
struct CountableOrder {
  std::string name;
  std::function<T(std::size_t)> enumerate;
  std::function<bool(const T&, const T&)> less;
  std::function<std::optional<T>(const std::optional<T>&, const std::optional<T>&)> between;
  std::function<std::string(const T&)> show;
};

template <class A, class B>
using PartialIso = std::vector<std::pair<A, B>>;  // ascending on both sides

namespace detail {

// One step: `from` supplies its least unmatched element x, `to` receives a
// partner placed like x. GetX/GetY read the two coordinates of a stored pair.
template <class X, class Y, class P, class GetX, class GetY, class Make>
void extend(P& pairs, const CountableOrder<X>& from, const CountableOrder<Y>& to, std::size_t& next,
            std::size_t search_limit, GetX get_x, GetY get_y, Make make) {
  auto below = [&](const X& x) {
    return std::partition_point(pairs.begin(), pairs.end(), [&](const auto& p) { return from.less(get_x(p), x); });
  };
  X x = from.enumerate(next);
  for (auto it = below(x); it != pairs.end() && !from.less(x, get_x(*it)); it = below(x)) x = from.enumerate(++next);

  auto pos = below(x);
  std::optional<Y> lo;
  std::optional<Y> hi;
  if (pos != pairs.begin()) lo = get_y(*std::prev(pos));
  if (pos != pairs.end()) hi = get_y(*pos);
  auto fits = [&](const Y& y) { return (!lo || to.less(*lo, y)) && (!hi || to.less(y, *hi)); };

  std::optional<Y> partner;
  for (std::size_t j = 0; j < search_limit && !partner; ++j) {
    Y y = to.enumerate(j);
    if (fits(y)) partner = std::move(y);
  }
  if (!partner) {
    partner = to.between(lo, hi);
    if (!partner || !fits(*partner)) {
      auto bound = [&](const std::optional<Y>& y) { return y ? to.show(*y) : std::string("none"); };
      throw PreconditionError("back-and-forth stalled on " + to.name + ": no element strictly between " + bound(lo) +
                              " and " + bound(hi));
    }
  }
  pairs.insert(pos, make(std::move(x), std::move(*partner)));
}

}  // namespace detail

// Cantor's back-and-forth for `rounds` rounds: even rounds match the least
// unmatched element of A, odd rounds the least unmatched element of B. A
// partner is the least-index element among the first `search_limit` that
// sits in the right interval; failing that the side's witness is asked. A
// witness failure throws PreconditionError naming the side and the bounds.
template <class A, class B>
PartialIso<A, B> back_and_forth(const CountableOrder<A>& a, const CountableOrder<B>& b, std::size_t rounds,
                                std::size_t search_limit = 4096) {
  PartialIso<A, B> pairs;
  std::size_t next_a = 0;
  std::size_t next_b = 0;
  auto first = [](const std::pair<A, B>& p) -> const A& { return p.first; };
  auto second = [](const std::pair<A, B>& p) -> const B& { return p.second; };
  for (std::size_t r = 0; r < rounds; ++r) {
    if (r % 2 == 0) {
      detail::extend(pairs, a, b, next_a, search_limit, first, second,
                     [](A x, B y) { return std::pair<A, B>(std::move(x), std::move(y)); });
    } else {
      detail::extend(pairs, b, a, next_b, search_limit, second, first,
                     [](B y, A x) { return std::pair<A, B>(std::move(x), std::move(y)); });
    }
  }
  return pairs;
}

// Strings by (length, lex): index i is i+1 in binary without its leading 1.
BinString nth_string(std::size_t i);
// Dyadics in (0,1) by (birthday, value).
sur::Dyadic nth_unit_dyadic(std::size_t i);

CountableOrder<BinString> string_order();
CountableOrder<sur::Dyadic> unit_dyadic_order();

// --- described cuts of Q -----------------------------------------------------

struct AtRationalLeftClosed {  // ({q' <= q}, {q' > q})
  num::Frac q;
};
struct AtRationalRightClosed {  // ({q' < q}, {q' >= q})
  num::Frac q;
};
struct SqrtThreshold {  // ({q <= 0 or q^2 < n}, rest)
  BigInt n;
};
using CutSpec = std::variant<AtRationalLeftClosed, AtRationalRightClosed, SqrtThreshold>;

struct CutClass {
  enum class Kind { Gap, LeftHasMax, RightHasMin } kind;
  std::optional<num::Frac> endpoint;

  friend bool operator==(const CutClass&, const CutClass&) = default;
};

// Throws PreconditionError for SqrtThreshold with n < 1.
CutClass classify_cut(const CutSpec& c);
// Whether q lies on the left side of the described cut.
bool in_left(const CutSpec& c, const num::Frac& q);

// "gap", "max 1/2", "min 2".
std::string to_string(const CutClass& c);

}  // namespace settheory::lin
