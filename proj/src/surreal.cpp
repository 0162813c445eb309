#include "settheory/surreal.hpp"

#include "settheory/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cctype>

namespace settheory::sur {

// --- Dyadic -----------------------------------------------------------------

Dyadic::Dyadic(BigInt numerator, std::size_t log_denominator)
    : num_(std::move(numerator)), log_den_(log_denominator) {
  if (num_ == 0) {
    log_den_ = 0;
    return;
  }
  const std::size_t twos = lsb(abs(num_));
  const std::size_t shift = std::min(twos, log_den_);
  num_ >>= shift;  // exact: the low bits are zero
  log_den_ -= shift;
}

BigInt Dyadic::floor() const {
  if (log_den_ == 0) return num_;
  // Arithmetic shift of a two's complement value rounds toward -inf; do it
  // by hand to stay independent of the backend's sign handling.
  BigInt q = abs(num_) >> log_den_;
  return num_ < 0 ? -q - 1 : q;
}

BigInt Dyadic::ceil() const { return is_integer() ? num_ : floor() + 1; }

namespace {

// Both numerators scaled to the common exponent max(ka, kb).
std::pair<BigInt, BigInt> aligned(const Dyadic& a, const Dyadic& b, std::size_t& k) {
  k = std::max(a.log_denominator(), b.log_denominator());
  return {a.numerator() << (k - a.log_denominator()), b.numerator() << (k - b.log_denominator())};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::size_t k = 0;
  auto [x, y] = aligned(a, b, k);
  return Dyadic(x + y, k);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.numerator() * b.numerator(), a.log_denominator() + b.log_denominator());
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::size_t k = 0;
  auto [x, y] = aligned(a, b, k);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t DyadicHash::operator()(const Dyadic& x) const noexcept {
  std::size_t seed = boost::hash<BigInt>{}(x.numerator());
  boost::hash_combine(seed, x.log_denominator());
  return seed;
}

// --- Birthday, simplicity, options ------------------------------------------

BigInt birthday(const Dyadic& x) {
  if (x.is_integer()) return abs(x.numerator());
  const BigInt whole = abs(x.numerator()) >> x.log_denominator();
  return whole + 1 + x.log_denominator();
}

Dyadic simplest(std::span<const Dyadic> left, std::span<const Dyadic> right) {
  std::optional<Dyadic> lo;
  std::optional<Dyadic> hi;
  if (!left.empty()) lo = *std::max_element(left.begin(), left.end());
  if (!right.empty()) hi = *std::min_element(right.begin(), right.end());
  if (lo && hi && *lo >= *hi) {
    throw PreconditionError("option sets are not separated: max left " + to_string(*lo) + " >= min right " +
                            to_string(*hi));
  }
  auto fits = [&](const Dyadic& z) { return (!lo || *lo < z) && (!hi || z < *hi); };

  // Integers first: among them the one of least absolute value.
  if (fits(Dyadic(0))) return Dyadic(0);
  if (lo && *lo >= Dyadic(0)) {
    Dyadic n(lo->floor() + 1);
    if (fits(n)) return n;
  }
  if (hi && *hi <= Dyadic(0)) {
    Dyadic n(hi->ceil() - 1);
    if (fits(n)) return n;
  }

  // Both bounds exist and no integer fits: bisect the unit interval above
  // floor(lo), which contains (lo, hi).
  Dyadic l(lo->floor());
  Dyadic r = l + Dyadic(1);
  for (;;) {
    const Dyadic sum = l + r;
    const Dyadic m(sum.numerator(), sum.log_denominator() + 1);
    if (fits(m)) return m;
    if (m <= *lo) {
      l = m;
    } else {
      r = m;
    }
  }
}

Options options(const Dyadic& x) {
  Options o;
  if (x.is_integer()) {
    if (x > Dyadic(0)) o.left.push_back(Dyadic(x.numerator() - 1));
    if (x < Dyadic(0)) o.right.push_back(Dyadic(x.numerator() + 1));
    return o;
  }
  const Dyadic step(1, x.log_denominator());
  o.left.push_back(x - step);
  o.right.push_back(x + step);
  return o;
}

// --- Conway arithmetic ------------------------------------------------------

std::size_t ConwayArithmetic::PairHash::operator()(const std::pair<Dyadic, Dyadic>& p) const noexcept {
  std::size_t seed = DyadicHash{}(p.first);
  boost::hash_combine(seed, DyadicHash{}(p.second));
  return seed;
}

void ConwayArithmetic::clear() {
  add_memo_.clear();
  mul_memo_.clear();
  neg_memo_.clear();
}

Dyadic ConwayArithmetic::add(const Dyadic& x, const Dyadic& y) {
  // Commutativity lets one table entry serve both argument orders.
  auto key = x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
  if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;

  const Options ox = options(x);
  const Options oy = options(y);
  std::vector<Dyadic> left;
  std::vector<Dyadic> right;
  for (const auto& xl : ox.left) left.push_back(add(xl, y));
  for (const auto& yl : oy.left) left.push_back(add(x, yl));
  for (const auto& xr : ox.right) right.push_back(add(xr, y));
  for (const auto& yr : oy.right) right.push_back(add(x, yr));
  Dyadic result = simplest(left, right);
  add_memo_.emplace(std::move(key), result);
  return result;
}

Dyadic ConwayArithmetic::neg(const Dyadic& x) {
  if (auto it = neg_memo_.find(x); it != neg_memo_.end()) return it->second;
  const Options ox = options(x);
  std::vector<Dyadic> left;
  std::vector<Dyadic> right;
  for (const auto& xr : ox.right) left.push_back(neg(xr));
  for (const auto& xl : ox.left) right.push_back(neg(xl));
  Dyadic result = simplest(left, right);
  neg_memo_.emplace(x, result);
  return result;
}

Dyadic ConwayArithmetic::combine(const Dyadic& p, const Dyadic& q, const Dyadic& r) {
  if (inner_ == InnerSum::Exact) return p + q - r;
  return add(add(p, q), neg(r));
}

Dyadic ConwayArithmetic::mul(const Dyadic& x, const Dyadic& y) {
  auto key = x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
  if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;

  const Options ox = options(x);
  const Options oy = options(y);
  std::vector<Dyadic> left;
  std::vector<Dyadic> right;
  // L: (xL, yL) and (xR, yR); R: (xL, yR) and (xR, yL). Each entry is
  // x'y + xy' - x'y'.
  auto term = [&](const Dyadic& xo, const Dyadic& yo) { return combine(mul(xo, y), mul(x, yo), mul(xo, yo)); };
  for (const auto& xl : ox.left) {
    for (const auto& yl : oy.left) left.push_back(term(xl, yl));
  }
  for (const auto& xr : ox.right) {
    for (const auto& yr : oy.right) left.push_back(term(xr, yr));
  }
  for (const auto& xl : ox.left) {
    for (const auto& yr : oy.right) right.push_back(term(xl, yr));
  }
  for (const auto& xr : ox.right) {
    for (const auto& yl : oy.left) right.push_back(term(xr, yl));
  }
  Dyadic result = simplest(left, right);
  mul_memo_.emplace(std::move(key), result);
  return result;
}

Dyadic conway_add(const Dyadic& x, const Dyadic& y) { return ConwayArithmetic{}.add(x, y); }

Dyadic conway_neg(const Dyadic& x) { return ConwayArithmetic{}.neg(x); }

Dyadic conway_mul(const Dyadic& x, const Dyadic& y) { return ConwayArithmetic{}.mul(x, y); }

// --- Sign expansions --------------------------------------------------------

SignExpansion to_signs(const Dyadic& x) {
  SignExpansion s;
  std::vector<Dyadic> lo;
  std::vector<Dyadic> hi;
  Dyadic v = simplest(lo, hi);
  while (v != x) {
    if (x > v) {
      s.bits.push_back(true);
      lo.assign(1, v);
    } else {
      s.bits.push_back(false);
      hi.assign(1, v);
    }
    v = simplest(lo, hi);
  }
  return s;
}

Dyadic from_signs(const SignExpansion& s) {
  std::vector<Dyadic> lo;
  std::vector<Dyadic> hi;
  Dyadic v = simplest(lo, hi);
  for (bool plus : s.bits) {
    (plus ? lo : hi).assign(1, v);
    v = simplest(lo, hi);
  }
  return v;
}

std::vector<Dyadic> born_by(std::size_t n) {
  if (n > 24) throw BudgetError("refusing to list more than 2^25 numbers");
  std::vector<Dyadic> out;
  out.reserve((std::size_t{1} << (n + 1)) - 1);
  // Every number with birthday <= n is the endpoint of a sign string of
  // length <= n; enumerate strings of each length as bit patterns.
  for (std::size_t len = 0; len <= n; ++len) {
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << len); ++pattern) {
      SignExpansion s;
      for (std::size_t i = 0; i < len; ++i) s.bits.push_back((pattern >> (len - 1 - i)) & 1U);
      out.push_back(from_signs(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Text -------------------------------------------------------------------

std::string to_string(const Dyadic& x) {
  if (x.is_integer()) return x.numerator().str();
  return x.numerator().str() + "/" + (BigInt(1) << x.log_denominator()).str();
}

Dyadic parse_dyadic(std::string_view text) {
  auto bad = [&](std::size_t col, const char* what) -> Dyadic {
    throw SyntaxError(what, 1, static_cast<int>(col) + 1, {"integer", "m/2^k"});
  };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(pos, end - pos);
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!digits(num_text)) return bad(pos, "malformed dyadic numerator");
  BigInt num(std::string{num_text});
  if (negative) num = -num;
  if (slash == std::string_view::npos) return Dyadic(num);
  std::string_view den_text = body.substr(slash + 1);
  if (!digits(den_text)) return bad(pos + slash + 1, "malformed dyadic denominator");
  BigInt den(std::string{den_text});
  if (den == 0) throw DomainError("zero denominator");
  const std::size_t k = lsb(den);
  if ((BigInt(1) << k) != den) throw DomainError("denominator " + den.str() + " is not a power of two");
  return Dyadic(num, k);
}

std::string to_string(const SignExpansion& s) {
  std::string out;
  for (bool b : s.bits) out.push_back(b ? '+' : '-');
  return out;
}

SignExpansion parse_signs(std::string_view text) {
  SignExpansion s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      s.bits.push_back(true);
    } else if (c == '-') {
      s.bits.push_back(false);
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      s.bits.push_back(false);
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw SyntaxError("unexpected character in sign expansion", 1, static_cast<int>(i) + 1, {"+", "-"});
    }
  }
  return s;
}

}  // namespace settheory::sur
