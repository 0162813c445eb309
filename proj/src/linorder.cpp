#include "settheory/linorder.hpp"

#include <boost/multiprecision/integer.hpp>

#include <bit>

namespace settheory::lin {

FinOrder<std::string> cut_extend(const FinOrder<std::string>& order) {
  auto join = [](const std::vector<std::string>& side) {
    std::string s;
    for (std::size_t i = 0; i < side.size(); ++i) s += (i ? "," : "") + side[i];
    return s;
  };
  return cut_extend(order, [&](const Cut<std::string>& c) { return "(" + join(c.left) + "|" + join(c.right) + ")"; });
}

FinOrder<sur::Dyadic> surreal_stage(std::size_t n) {
  FinOrder<sur::Dyadic> stage;
  for (std::size_t i = 0; i < n; ++i) {
    stage = cut_extend(stage, [](const Cut<sur::Dyadic>& c) { return sur::simplest(c.left, c.right); });
  }
  return stage;
}

std::strong_ordering u_cmp(const BinString& f, const BinString& g) {
  const std::string& a = f.bits;
  const std::string& b = g.bits;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] == '0' ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.size() == b.size()) return std::strong_ordering::equal;
  // One extends the other; the next digit of the longer says which side.
  if (a.size() > b.size()) return a[n] == '0' ? std::strong_ordering::less : std::strong_ordering::greater;
  return b[n] == '1' ? std::strong_ordering::less : std::strong_ordering::greater;
}

BinString insert_between(std::span<const BinString> a, std::span<const BinString> b) {
  const BinString* lo = nullptr;
  const BinString* hi = nullptr;
  for (const auto& x : a) {
    if (!lo || u_less(*lo, x)) lo = &x;
  }
  for (const auto& y : b) {
    if (!hi || u_less(y, *hi)) hi = &y;
  }
  if (lo && hi && !u_less(*lo, *hi)) {
    throw PreconditionError("insert_between needs a < b, but " + to_string(*lo) + " is not below " + to_string(*hi));
  }
  // Descend from the root; the first node inside (lo, hi) is the shallowest.
  BinString z;
  while (true) {
    if (lo && !u_less(*lo, z)) {
      z.bits.push_back('1');
    } else if (hi && !u_less(z, *hi)) {
      z.bits.push_back('0');
    } else {
      return z;
    }
  }
}

std::string to_string(const BinString& s) { return s.bits.empty() ? std::string("\"\"") : s.bits; }

BinString parse_binstring(std::string_view text) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '"' && body.back() == '"') body = body.substr(1, body.size() - 2);
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      throw SyntaxError("binary strings use only 0 and 1", 1, static_cast<int>(i) + 1, {"0", "1"});
    }
  }
  return BinString{std::string(body)};
}

BinString nth_string(std::size_t i) {
  const std::size_t v = i + 1;
  const int width = std::bit_width(v) - 1;
  BinString s;
  for (int k = width - 1; k >= 0; --k) s.bits.push_back(((v >> k) & 1U) ? '1' : '0');
  return s;
}

sur::Dyadic nth_unit_dyadic(std::size_t i) {
  const std::size_t v = i + 1;
  const std::size_t level = static_cast<std::size_t>(std::bit_width(v) - 1);
  const std::size_t j = v - (std::size_t{1} << level);
  return sur::Dyadic(BigInt(2 * j + 1), level + 1);
}

CountableOrder<BinString> string_order() {
  CountableOrder<BinString> o;
  o.name = "binary strings";
  o.enumerate = nth_string;
  o.less = u_less;
  o.between = [](const std::optional<BinString>& lo, const std::optional<BinString>& hi) -> std::optional<BinString> {
    std::vector<BinString> a;
    std::vector<BinString> b;
    if (lo) a.push_back(*lo);
    if (hi) b.push_back(*hi);
    return insert_between(a, b);
  };
  o.show = [](const BinString& s) { return to_string(s); };
  return o;
}

CountableOrder<sur::Dyadic> unit_dyadic_order() {
  CountableOrder<sur::Dyadic> o;
  o.name = "dyadics in (0,1)";
  o.enumerate = nth_unit_dyadic;
  o.less = [](const sur::Dyadic& x, const sur::Dyadic& y) { return x < y; };
  o.between = [](const std::optional<sur::Dyadic>& lo,
                 const std::optional<sur::Dyadic>& hi) -> std::optional<sur::Dyadic> {
    const sur::Dyadic l = lo.value_or(sur::Dyadic(0));
    const sur::Dyadic r = hi.value_or(sur::Dyadic(1));
    return sur::simplest(std::span<const sur::Dyadic>(&l, 1), std::span<const sur::Dyadic>(&r, 1));
  };
  o.show = [](const sur::Dyadic& x) { return sur::to_string(x); };
  return o;
}

CutClass classify_cut(const CutSpec& c) {
  if (const auto* l = std::get_if<AtRationalLeftClosed>(&c)) return {CutClass::Kind::LeftHasMax, l->q};
  if (const auto* r = std::get_if<AtRationalRightClosed>(&c)) return {CutClass::Kind::RightHasMin, r->q};
  const BigInt& n = std::get<SqrtThreshold>(c).n;
  if (n < 1) throw PreconditionError("square-root threshold must be at least 1");
  // A rational root of q^2 = n would be an integer, so the cut has an
  // endpoint exactly when n is a perfect square.
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) return {CutClass::Kind::RightHasMin, num::q_make(num::ZInt{root}, num::ZInt{1})};
  return {CutClass::Kind::Gap, std::nullopt};
}

bool in_left(const CutSpec& c, const num::Frac& q) {
  if (const auto* l = std::get_if<AtRationalLeftClosed>(&c)) return num::q_cmp(q, l->q) <= 0;
  if (const auto* r = std::get_if<AtRationalRightClosed>(&c)) return num::q_cmp(q, r->q) < 0;
  const BigInt& n = std::get<SqrtThreshold>(c).n;
  return q.num() <= 0 || q.num() * q.num() < n * q.den() * q.den();
}

std::string to_string(const CutClass& c) {
  switch (c.kind) {
    case CutClass::Kind::Gap:
      return "gap";
    case CutClass::Kind::LeftHasMax:
      return "max " + num::to_string(*c.endpoint);
    case CutClass::Kind::RightHasMin:
      return "min " + num::to_string(*c.endpoint);
  }
  return {};
}

}  // namespace settheory::lin
