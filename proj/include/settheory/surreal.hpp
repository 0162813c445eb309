#pragma once

#include "settheory/bigint.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace settheory::sur {

// A dyadic rational numerator / 2^log_denominator in lowest terms. These are
// exactly the surreal numbers with finite birthday.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt n) : num_(std::move(n)) {}
  Dyadic(BigInt numerator, std::size_t log_denominator);

  const BigInt& numerator() const noexcept { return num_; }
  std::size_t log_denominator() const noexcept { return log_den_; }
  bool is_integer() const noexcept { return log_den_ == 0; }
  BigInt floor() const;
  BigInt ceil() const;

  // Exact rational arithmetic. The Conway recursions below are separate
  // entry points; these operators exist for option bookkeeping.
  Dyadic operator-() const { return Dyadic(-num_, log_den_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt num_ = 0;
  std::size_t log_den_ = 0;
};

struct DyadicHash {
  std::size_t operator()(const Dyadic& x) const noexcept;
};

// Binary string of signs, + stored as true and - as false.
struct SignExpansion {
  std::vector<bool> bits;

  friend bool operator==(const SignExpansion&, const SignExpansion&) = default;
};

// Canonical options: the nearest earlier-born numbers on each side.
struct Options {
  std::vector<Dyadic> left;
  std::vector<Dyadic> right;
};

// Index of the first cut-extension stage containing x:
// |x| for integers, floor(|x|) + 1 + k for m/2^k with k > 0.
BigInt birthday(const Dyadic& x);

// The unique earliest-born number strictly above every element of `left` and
// strictly below every element of `right`. Throws PreconditionError when
// max(left) >= min(right).
Dyadic simplest(std::span<const Dyadic> left, std::span<const Dyadic> right);

Options options(const Dyadic& x);

// Recursive Conway arithmetic, memoized. An instance is not thread-safe; use
// one per thread. Results do not depend on what is already cached.
class ConwayArithmetic {
 public:
  // How the three-term combinations inside the product are summed: with the
  // recursive addition itself, or exactly. Both give identical results; the
  // exact mode keeps the product recursion polynomial for large operands.
  enum class InnerSum { Conway, Exact };

  explicit ConwayArithmetic(InnerSum inner = InnerSum::Exact) : inner_(inner) {}

  Dyadic add(const Dyadic& x, const Dyadic& y);
  Dyadic neg(const Dyadic& x);
  Dyadic mul(const Dyadic& x, const Dyadic& y);

  std::size_t cache_size() const noexcept { return add_memo_.size() + neg_memo_.size() + mul_memo_.size(); }
  void clear();

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Dyadic, Dyadic>& p) const noexcept;
  };
  using PairMemo = std::unordered_map<std::pair<Dyadic, Dyadic>, Dyadic, PairHash>;

  Dyadic combine(const Dyadic& p, const Dyadic& q, const Dyadic& r);  // p + q - r

  InnerSum inner_;
  PairMemo add_memo_;
  PairMemo mul_memo_;
  std::unordered_map<Dyadic, Dyadic, DyadicHash> neg_memo_;
};

Dyadic conway_add(const Dyadic& x, const Dyadic& y);
Dyadic conway_neg(const Dyadic& x);
Dyadic conway_mul(const Dyadic& x, const Dyadic& y);

// The path from 0 to x in the tree of finite-birthday numbers; its length is
// birthday(x).
SignExpansion to_signs(const Dyadic& x);
Dyadic from_signs(const SignExpansion& s);

// All numbers with birthday <= n, ascending (2^(n+1) - 1 of them).
std::vector<Dyadic> born_by(std::size_t n);

// "3/4", "-5/8", "2".
std::string to_string(const Dyadic& x);
Dyadic parse_dyadic(std::string_view text);
// "+-+"; the expansion of 0 is the empty string.
std::string to_string(const SignExpansion& s);
// Accepts '+' and '-' (also U+2212).
SignExpansion parse_signs(std::string_view text);

}  // namespace settheory::sur
