#pragma once

#include "settheory/bigint.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace settheory::ord {

// Maximum nesting of exponents. Everything representable here is below
// epsilon_0; the cap keeps recursion bounded.
inline constexpr std::size_t kMaxDepth = 64;

// An ordinal below epsilon_0 in Cantor normal form
//   w^e1 * k1 + ... + w^en * kn,   e1 > ... > en,   ki >= 1.
// The empty term list is 0. Values are immutable and cheap to copy.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(unsigned long long n);  // NOLINT(google-explicit-constructor): naturals are ordinals
  explicit Ordinal(const BigInt& n);

  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& exponent, const BigInt& coefficient = 1);
  // Validates strictly decreasing exponents and positive coefficients.
  static Ordinal from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept;
  bool is_zero() const noexcept { return terms_ == nullptr; }
  bool is_finite() const noexcept;
  // The value as a natural number, if finite.
  std::optional<BigInt> as_natural() const;
  // 0 for zero, 1 for positive naturals, 1 + max exponent depth otherwise.
  std::size_t depth() const noexcept { return depth_; }

  const Ordinal& leading_exponent() const;  // precondition: nonzero

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::shared_ptr<const std::vector<Term>> terms_;
  std::size_t depth_ = 0;
};

struct Ordinal::Term {
  Ordinal exponent;
  BigInt coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Kind { Zero, Successor, Limit };
enum class Cofinality { Zero, One, Omega };

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);
Ordinal succ(const Ordinal& a);
Kind kind(const Ordinal& a);

Ordinal add(const Ordinal& a, const Ordinal& b);
// The unique g with a + g = b. Throws DomainError when a > b. There is no
// right subtraction: a + g = b + g does not force a = b.
Ordinal lsub(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
// (q, r) with b = a*q + r and r < a. Throws DomainError when a = 0.
std::pair<Ordinal, Ordinal> divmod(const Ordinal& b, const Ordinal& a);
// Ordinal exponentiation a^b with a^0 = 1 (including 0^0) and 0^b = 0 for b > 0.
Ordinal opow(const Ordinal& a, const Ordinal& b);
// Natural (Hessenberg) sum: coefficientwise addition of normal forms.
Ordinal hessenberg(const Ordinal& a, const Ordinal& b);

// True iff a = w^b for some b.
bool is_indecomposable(const Ordinal& a);
// For a decomposable nonzero a, some (b, c) with b, c < a and b + c = a.
std::optional<std::pair<Ordinal, Ordinal>> decomposition(const Ordinal& a);
Cofinality cofinality_class(const Ordinal& a);

// Canonical text: "w^(b)*k" terms in decreasing order, eliding "*1", "^1" and
// the "w^0" of the finite part. Exponents that are naturals or w are printed
// without parentheses.
std::string to_string(const Ordinal& a);
std::string to_string(Kind k);
std::string to_string(Cofinality c);

// Parses "w", naturals, "+", "*", "^" and parentheses with the usual
// precedence (^ binds tightest and associates to the right). The expression
// is evaluated with ordinal arithmetic, so "1+w" parses to w.
Ordinal parse_ordinal(std::string_view text);

}  // namespace settheory::ord
