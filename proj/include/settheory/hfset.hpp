#pragma once

#include "settheory/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace settheory::hf {

// Upper bound on the number of elements any single materialization may
// produce (power sets, von Neumann stages, Goedel extensions).
struct Budget {
  std::size_t max_elements = 1'000'000;
};

// A hereditarily finite set. Elements are kept sorted by ascending Ackermann
// code with no duplicates, so structural equality is set equality.
//
// The Ackermann order is evaluated structurally (compare the largest
// elements first) rather than by materializing codes: a set of rank 6 can
// have a code with more than 2^65536 bits.
class HFSet {
 public:
  HFSet() = default;

  // Builds the set with the given members; order and repetitions are
  // irrelevant.
  static HFSet of(std::vector<HFSet> elements);

  std::span<const HFSet> elements() const noexcept;
  std::size_t size() const noexcept { return node_ ? node_->elements.size() : 0; }
  bool empty() const noexcept { return node_ == nullptr; }
  bool contains(const HFSet& x) const;

  // Membership rank: sup{rank(y)+1 : y in x}.
  std::size_t rank() const noexcept { return node_ ? node_->rank : 0; }
  std::size_t hash() const noexcept { return node_ ? node_->hash : kEmptyHash; }

  friend bool operator==(const HFSet& a, const HFSet& b);
  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b);

 private:
  struct Node {
    std::vector<HFSet> elements;
    std::size_t hash;
    std::size_t rank;
  };
  static constexpr std::size_t kEmptyHash = 0x9e3779b97f4a7c15ULL;

  explicit HFSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  // Precondition: `sorted` is strictly ascending.
  static HFSet from_sorted(std::vector<HFSet> sorted);

  std::shared_ptr<const Node> node_;

  friend HFSet unite(const HFSet&, const HFSet&);
  friend HFSet inter(const HFSet&, const HFSet&);
  friend HFSet diff(const HFSet&, const HFSet&);
};

// --- Basic constructors -----------------------------------------------------

HFSet empty();
HFSet singleton(const HFSet& x);
HFSet pair(const HFSet& x, const HFSet& y);

// Kuratowski pair {{x},{x,y}} and the triple <<x,y>,z>.
HFSet kpair(const HFSet& x, const HFSet& y);
HFSet triple(const HFSet& x, const HFSet& y, const HFSet& z);
std::optional<std::pair<HFSet, HFSet>> kpair_parts(const HFSet& p);

// --- Boolean and Zermelo operations -----------------------------------------

HFSet union_of(const HFSet& x);  // the union of the members of x
HFSet unite(const HFSet& x, const HFSet& y);
HFSet inter(const HFSet& x, const HFSet& y);
HFSet diff(const HFSet& x, const HFSet& y);
HFSet power(const HFSet& x, const Budget& budget = {});
HFSet product(const HFSet& x, const HFSet& y);  // Kuratowski pairs <u,v>
bool is_subset(const HFSet& x, const HFSet& y);
bool is_transitive(const HFSet& x);

// Smallest transitive superset of x: the fixpoint of y -> y u Uy.
HFSet tc(const HFSet& x);

// --- Naturals, rank, stages -------------------------------------------------

HFSet vn_nat(std::size_t n);
std::optional<std::size_t> nat_of(const HFSet& x);
std::size_t rank_in(const HFSet& x);

// V_n, materialized only for n <= 4.
HFSet v_stage(std::size_t n, const Budget& budget = {});
// |V_n| = 2^|V_{n-1}|; representable for n <= 6.
BigInt v_size(std::size_t n);

// --- Goedel operations ------------------------------------------------------

// G_0 ... G_8. Relational operations skip members that are not Kuratowski
// pairs (or triples, for G_8).
HFSet goedel_op(int i, const HFSet& x, const HFSet& y);
// Union of G_i[x * x] over i in 0..8.
HFSet goedel_ext(const HFSet& x, const Budget& budget = {});
// n-fold iterate of goedel_ext.
HFSet goedel_hull(const HFSet& x, std::size_t n, const Budget& budget = {});

// A 9-labeling of the full binary tree of binary strings shorter than
// `height`. Labels are stored in heap order: the root (empty string) is
// index 0 and the children of node i are 2i+1 (bit 0) and 2i+2 (bit 1).
class GoedelTree {
 public:
  GoedelTree(std::size_t height, std::vector<std::uint8_t> labels);

  std::size_t height() const noexcept { return height_; }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }
  std::uint8_t label(std::string_view path) const;
  // The labeling of the subtree below the root's k-child.
  GoedelTree subtree(int k) const;

  // Number of labelings of a tree of this height: 9^(2^height - 1).
  static std::uint64_t labeling_count(std::size_t height);
  // The index-th labeling in lexicographic order of the heap-ordered labels.
  static GoedelTree nth(std::size_t height, std::uint64_t index);

 private:
  std::size_t height_;
  std::vector<std::uint8_t> labels_;
};

// Evaluates the composite Goedel operation described by `tree` on a tuple of
// 2^height sets. Entry i of the tuple corresponds to the binary expansion of i
// (most significant bit first), so the first half is the 0-subtree's input.
HFSet goedel_tree_eval(const GoedelTree& tree, std::span<const HFSet> x);

// --- Cantor diagonal --------------------------------------------------------

// a = {z in x : z not in f(z)}. Requires dom(f) to be exactly the members of
// x and every value to be a subset of x.
HFSet cantor_diagonal(const std::map<HFSet, HFSet>& f, const HFSet& x);

// --- Ackermann coding and text form -----------------------------------------

// Sum of 2^code(e) over members e. Throws BudgetError when a member's code
// would not fit in memory.
BigInt ackermann_encode(const HFSet& x);
HFSet ackermann_decode(const BigInt& n);

// Canonical text: "{}", "{{},{{}}}", members in canonical order.
std::string to_string(const HFSet& x);
// Whitespace-insensitive inverse of to_string.
HFSet parse_hfset(std::string_view text);

}  // namespace settheory::hf

template <>
struct std::hash<settheory::hf::HFSet> {
  std::size_t operator()(const settheory::hf::HFSet& x) const noexcept { return x.hash(); }
};
