#include "settheory/numtower.hpp"

#include "settheory/errors.hpp"

#include <algorithm>
#include <cctype>

namespace settheory::num {

namespace {

// Von Neumann naturals are materialized one member per unit, so encodings
// are refused past this size.
constexpr std::size_t kMaxEncodedNatural = 100'000;

std::size_t natural_size(const BigInt& n) {
  if (n > kMaxEncodedNatural) throw BudgetError("integer " + n.str() + " is too large to encode as a set");
  return static_cast<std::size_t>(n);
}

}  // namespace

BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

hf::HFSet z_encode(const ZInt& n) {
  if (n.value >= 0) return hf::vn_nat(natural_size(n.value));
  return hf::kpair(hf::empty(), hf::vn_nat(natural_size(-n.value)));
}

std::optional<ZInt> z_decode(const hf::HFSet& x) {
  if (auto n = hf::nat_of(x)) return ZInt{BigInt(*n)};
  auto parts = hf::kpair_parts(x);
  if (!parts || !parts->first.empty()) return std::nullopt;
  auto n = hf::nat_of(parts->second);
  if (!n || *n == 0) return std::nullopt;
  return ZInt{-BigInt(*n)};
}

bool z_leq_encoded(const hf::HFSet& x, const hf::HFSet& y) {
  auto negative_part = [](const hf::HFSet& s) -> std::optional<hf::HFSet> {
    auto parts = hf::kpair_parts(s);
    if (!parts || !parts->first.empty() || !hf::nat_of(parts->second) || parts->second.empty()) return std::nullopt;
    return parts->second;
  };
  const bool x_nat = hf::nat_of(x).has_value();
  const bool y_nat = hf::nat_of(y).has_value();
  auto x_neg = negative_part(x);
  auto y_neg = negative_part(y);
  if ((!x_nat && !x_neg) || (!y_nat && !y_neg)) throw DomainError("argument is not an encoded integer");
  if (x_neg && y_nat) return true;
  if (x_nat && y_nat) return hf::is_subset(x, y);
  if (x_neg && y_neg) return hf::is_subset(*y_neg, *x_neg);
  return false;
}

Frac q_make(const ZInt& m, const ZInt& n) {
  if (n.value == 0) throw DomainError("zero denominator");
  if (n.value < 0) throw DomainError("denominator must be positive");
  BigInt g = gcd(m.value, n.value);
  Frac q;
  q.num_ = m.value / g;
  q.den_ = n.value / g;
  return q;
}

Frac q_make(long long m, long long n) { return q_make(ZInt{m}, ZInt{n}); }

Frac q_add(const Frac& a, const Frac& b) {
  return q_make(ZInt{a.num() * b.den() + b.num() * a.den()}, ZInt{a.den() * b.den()});
}

Frac q_mul(const Frac& a, const Frac& b) { return q_make(ZInt{a.num() * b.num()}, ZInt{a.den() * b.den()}); }

Frac q_neg(const Frac& a) { return q_make(ZInt{-a.num()}, ZInt{a.den()}); }

std::strong_ordering q_cmp(const Frac& a, const Frac& b) {
  // m/n <= k/l iff m*l <= k*n (denominators positive).
  const BigInt lhs = a.num() * b.den();
  const BigInt rhs = b.num() * a.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

hf::HFSet q_encode(const Frac& a) {
  if (a.is_integer()) return z_encode(ZInt{a.num()});
  return hf::kpair(z_encode(ZInt{a.num()}), hf::vn_nat(natural_size(a.den())));
}

std::optional<Frac> q_decode(const hf::HFSet& x) {
  if (auto z = z_decode(x)) return q_make(*z, ZInt{1});
  auto parts = hf::kpair_parts(x);
  if (!parts) return std::nullopt;
  auto m = z_decode(parts->first);
  auto n = hf::nat_of(parts->second);
  if (!m || !n || *n < 2) return std::nullopt;
  if (gcd(m->value, BigInt(*n)) != 1) return std::nullopt;
  return q_make(*m, ZInt{BigInt(*n)});
}

Frac to_frac(const sur::Dyadic& x) {
  return q_make(ZInt{x.numerator()}, ZInt{BigInt(1) << x.log_denominator()});
}

std::optional<sur::Dyadic> to_dyadic(const Frac& q) {
  const std::size_t k = lsb(q.den());
  if ((BigInt(1) << k) != q.den()) return std::nullopt;
  return sur::Dyadic(q.num(), k);
}

std::string to_string(const Frac& q) {
  if (q.is_integer()) return q.num().str();
  return q.num().str() + "/" + q.den().str();
}

Frac parse_frac(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto integer = [](std::string_view s, bool allow_sign) -> std::optional<BigInt> {
    bool neg = false;
    if (allow_sign && !s.empty() && s[0] == '-') {
      neg = true;
      s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return std::nullopt;
    }
    BigInt v(std::string{s});
    return neg ? BigInt(-v) : v;
  };
  std::string_view body = trim(text);
  const std::size_t slash = body.find('/');
  auto m = integer(body.substr(0, slash), true);
  if (!m) throw SyntaxError("malformed rational numerator", 1, 1, {"integer"});
  if (slash == std::string_view::npos) return q_make(ZInt{*m}, ZInt{1});
  auto n = integer(body.substr(slash + 1), false);
  if (!n) throw SyntaxError("malformed rational denominator", 1, static_cast<int>(slash) + 2, {"natural"});
  return q_make(ZInt{*m}, ZInt{*n});
}

}  // namespace settheory::num
