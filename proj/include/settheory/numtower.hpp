#pragma once

#include "settheory/bigint.hpp"
#include "settheory/hfset.hpp"
#include "settheory/surreal.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace settheory::num {

// An integer. Nonnegative values encode as von Neumann naturals, -n as the
// Kuratowski pair <0, n>.
struct ZInt {
  BigInt value;

  friend bool operator==(const ZInt&, const ZInt&) = default;
  friend std::strong_ordering operator<=>(const ZInt& a, const ZInt& b) {
    if (a.value < b.value) return std::strong_ordering::less;
    if (a.value > b.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// A rational in lowest terms with positive denominator; the sign lives on the
// numerator.
class Frac {
 public:
  Frac() = default;
  Frac(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend bool operator==(const Frac&, const Frac&) = default;

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;

  friend Frac q_make(const ZInt& m, const ZInt& n);
};

BigInt gcd(BigInt a, BigInt b);

hf::HFSet z_encode(const ZInt& n);
std::optional<ZInt> z_decode(const hf::HFSet& x);
// The reflexive order on encoded integers, evaluated on the sets themselves:
// (negatives x naturals) u {<n,m> : n subset m} u {<-n,-m> : m subset n}.
// Throws DomainError if either argument is not an encoded integer.
bool z_leq_encoded(const hf::HFSet& x, const hf::HFSet& y);

// m/n reduced by gcd. Throws DomainError unless n > 0.
Frac q_make(const ZInt& m, const ZInt& n);
Frac q_make(long long m, long long n);
Frac q_add(const Frac& a, const Frac& b);
Frac q_mul(const Frac& a, const Frac& b);
Frac q_neg(const Frac& a);
std::strong_ordering q_cmp(const Frac& a, const Frac& b);

// Integers encode as integers; a non-integer m/n as <z_encode(m), n>.
hf::HFSet q_encode(const Frac& a);
std::optional<Frac> q_decode(const hf::HFSet& x);

Frac to_frac(const sur::Dyadic& x);
// The dyadic with the same value, if the denominator is a power of two.
std::optional<sur::Dyadic> to_dyadic(const Frac& q);

// "m/n" or "m"; accepts a leading '-'.
std::string to_string(const Frac& q);
Frac parse_frac(std::string_view text);

}  // namespace settheory::num
