#include "settheory/ordinal.hpp"

#include "settheory/errors.hpp"

#include <algorithm>
#include <cctype>

namespace settheory::ord {

namespace {

using Term = Ordinal::Term;

std::size_t depth_of(const std::vector<Term>& terms) {
  std::size_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.exponent.depth() + 1);
  return d;
}

}  // namespace

// Every construction funnels through from_terms, which enforces the normal
// form and the depth cap.
Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  Ordinal out;
  if (terms.empty()) return out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("Cantor normal form coefficients must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw DomainError("Cantor normal form exponents must be strictly decreasing");
    }
  }
  out.depth_ = depth_of(terms);
  if (out.depth_ > kMaxDepth) {
    throw BudgetError("ordinal exponent nesting exceeds the depth cap of " + std::to_string(kMaxDepth));
  }
  out.terms_ = std::make_shared<const std::vector<Term>>(std::move(terms));
  return out;
}

Ordinal::Ordinal(unsigned long long n) : Ordinal(BigInt(n)) {}

Ordinal::Ordinal(const BigInt& n) {
  if (n < 0) throw DomainError("ordinals are nonnegative");
  if (n > 0) *this = from_terms({Term{Ordinal{}, n}});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, const BigInt& coefficient) {
  return from_terms({Term{exponent, coefficient}});
}

std::span<const Term> Ordinal::terms() const noexcept {
  if (!terms_) return {};
  return *terms_;
}

bool Ordinal::is_finite() const noexcept { return depth_ <= 1; }

std::optional<BigInt> Ordinal::as_natural() const {
  if (is_zero()) return BigInt(0);
  if (!is_finite()) return std::nullopt;
  return (*terms_)[0].coefficient;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (is_zero()) throw DomainError("zero has no leading exponent");
  return (*terms_)[0].exponent;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_ == b.terms_) return true;
  if (a.depth_ != b.depth_) return false;
  auto x = a.terms();
  auto y = b.terms();
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  if (a.terms_ == b.terms_) return std::strong_ordering::equal;
  auto x = a.terms();
  auto y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal succ(const Ordinal& a) { return add(a, Ordinal(1)); }

Kind kind(const Ordinal& a) {
  if (a.is_zero()) return Kind::Zero;
  return a.terms().back().exponent.is_zero() ? Kind::Successor : Kind::Limit;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<Term> out;
  auto bt = b.terms();
  // Terms of a below b's leading exponent are absorbed.
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      out.push_back(Term{lead, t.coefficient + bt[0].coefficient});
      out.insert(out.end(), bt.begin() + 1, bt.end());
      return Ordinal::from_terms(std::move(out));
    } else {
      break;
    }
  }
  out.insert(out.end(), bt.begin(), bt.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal lsub(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw DomainError("left subtraction needs a <= b, got a = " + to_string(a) + ", b = " + to_string(b));
  auto x = a.terms();
  auto y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return Ordinal::from_terms(std::vector<Term>(y.begin() + i, y.end()));
  // a <= b, so y[i] exceeds x[i] either in exponent or in coefficient.
  std::vector<Term> out;
  if (y[i].exponent == x[i].exponent) {
    out.push_back(Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
    out.insert(out.end(), y.begin() + i + 1, y.end());
  } else {
    out.assign(y.begin() + i, y.end());
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const Ordinal& lead = a.leading_exponent();
  Ordinal result;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      // a * m: only the leading coefficient scales.
      std::vector<Term> scaled(a.terms().begin(), a.terms().end());
      scaled[0].coefficient *= t.coefficient;
      part = Ordinal::from_terms(std::move(scaled));
    } else {
      part = Ordinal::omega_pow(add(lead, t.exponent), t.coefficient);
    }
    result = add(result, part);
  }
  return result;
}

std::pair<Ordinal, Ordinal> divmod(const Ordinal& b, const Ordinal& a) {
  if (a.is_zero()) throw DomainError("division by the zero ordinal");
  const Ordinal& lead = a.leading_exponent();
  const BigInt& lead_coef = a.terms()[0].coefficient;
  std::vector<Term> quotient;
  Ordinal rest = b;
  while (rest >= a) {
    const Term& top = rest.terms()[0];
    if (top.exponent > lead) {
      // a * w^g = w^(lead+g) for g > 0, so the whole leading term divides.
      quotient.push_back(Term{lsub(lead, top.exponent), top.coefficient});
      auto rt = rest.terms();
      rest = Ordinal::from_terms(std::vector<Term>(rt.begin() + 1, rt.end()));
      continue;
    }
    BigInt c = top.coefficient / lead_coef;
    Ordinal product = mul(a, Ordinal(c));
    if (product > rest) {
      c -= 1;
      product = mul(a, Ordinal(c));
    }
    quotient.push_back(Term{Ordinal{}, c});
    rest = lsub(product, rest);
    break;
  }
  return {Ordinal::from_terms(std::move(quotient)), rest};
}

namespace {

Ordinal power_natural(const Ordinal& a, BigInt n) {
  Ordinal result(1);
  Ordinal base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace

Ordinal opow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal(1);
  if (a.is_zero()) return Ordinal{};
  if (a == Ordinal(1)) return a;

  // b = b_inf + n with n finite.
  auto bt = b.terms();
  BigInt n = 0;
  std::vector<Term> inf_terms(bt.begin(), bt.end());
  if (!inf_terms.empty() && inf_terms.back().exponent.is_zero()) {
    n = inf_terms.back().coefficient;
    inf_terms.pop_back();
  }
  Ordinal b_inf = Ordinal::from_terms(std::move(inf_terms));

  if (a.is_finite()) {
    const BigInt k = *a.as_natural();
    if (n > (BigInt(1) << 24)) throw BudgetError("finite power too large to materialize");
    BigInt kn = pow(k, static_cast<unsigned>(n));
    if (b_inf.is_zero()) return Ordinal(kn);
    // k^(w*c) = w^c: divide each infinite exponent by w.
    std::vector<Term> reduced;
    for (const auto& t : b_inf.terms()) {
      Ordinal e = t.exponent.is_finite() ? lsub(Ordinal(1), t.exponent) : t.exponent;
      reduced.push_back(Term{e, t.coefficient});
    }
    return Ordinal::omega_pow(Ordinal::from_terms(std::move(reduced)), kn);
  }

  if (n > 1'000'000) throw BudgetError("finite power of an infinite ordinal too large to materialize");
  Ordinal finite_part = power_natural(a, n);
  if (b_inf.is_zero()) return finite_part;
  // For infinite a and limit l: a^l = w^(lead(a) * l).
  Ordinal limit_part = Ordinal::omega_pow(mul(a.leading_exponent(), b_inf));
  return mul(limit_part, finite_part);
}

Ordinal hessenberg(const Ordinal& a, const Ordinal& b) {
  auto x = a.terms();
  auto y = b.terms();
  std::vector<Term> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exponent > x[i].exponent) {
      out.push_back(y[j++]);
    } else {
      out.push_back(Term{x[i].exponent, x[i].coefficient + y[j].coefficient});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

bool is_indecomposable(const Ordinal& a) { return a.terms().size() == 1 && a.terms()[0].coefficient == 1; }

std::optional<std::pair<Ordinal, Ordinal>> decomposition(const Ordinal& a) {
  if (a.is_zero() || is_indecomposable(a)) return std::nullopt;
  auto t = a.terms();
  if (t.size() > 1) {
    return std::make_pair(Ordinal::from_terms({t[0]}), Ordinal::from_terms(std::vector<Term>(t.begin() + 1, t.end())));
  }
  return std::make_pair(Ordinal::omega_pow(t[0].exponent, t[0].coefficient - 1), Ordinal::omega_pow(t[0].exponent));
}

Cofinality cofinality_class(const Ordinal& a) {
  switch (kind(a)) {
    case Kind::Zero:
      return Cofinality::Zero;
    case Kind::Successor:
      return Cofinality::One;
    case Kind::Limit:
      break;
  }
  return Cofinality::Omega;
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) {
      std::string e = to_string(t.exponent);
      if (t.exponent.is_finite() || t.exponent == Ordinal::omega()) {
        out += '^' + e;
      } else {
        out += "^(" + e + ')';
      }
    }
    if (t.coefficient != 1) out += '*' + t.coefficient.str();
  }
  return out;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Zero:
      return "zero";
    case Kind::Successor:
      return "successor";
    case Kind::Limit:
      return "limit";
  }
  return "?";
}

std::string to_string(Cofinality c) {
  switch (c) {
    case Cofinality::Zero:
      return "0";
    case Cofinality::One:
      return "1";
    case Cofinality::Omega:
      return "w";
  }
  return "?";
}

namespace {

class OrdinalReader {
 public:
  explicit OrdinalReader(std::string_view text) : text_(text) {}

  Ordinal read_all() {
    Ordinal v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input", {"+", "*", "^", "end of input"});
    return v;
  }

 private:
  Ordinal expr() {
    Ordinal v = term();
    while (accept('+')) v = add(v, term());
    return v;
  }

  Ordinal term() {
    Ordinal v = factor();
    while (accept('*')) v = mul(v, factor());
    return v;
  }

  Ordinal factor() {
    Ordinal base = atom();
    if (accept('^')) return opow(base, factor());
    return base;
  }

  Ordinal atom() {
    skip_space();
    if (accept('(')) {
      Ordinal v = expr();
      if (!accept(')')) fail("unbalanced parenthesis", {")"});
      return v;
    }
    if (accept('w')) return Ordinal::omega();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Ordinal(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    fail("expected an ordinal term", {"w", "natural", "("});
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw SyntaxError(what, 1, static_cast<int>(pos_) + 1, std::move(expected));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalReader(text).read_all(); }

}  // namespace settheory::ord
