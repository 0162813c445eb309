#include "settheory/hfset.hpp"

#include "settheory/errors.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace settheory::hf {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix64 finalizer over the running hash
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

// Every live node is registered here, so equal sets share one node and
// equality is pointer identity. Without this, comparing two separately built
// copies of the natural n takes 2^n steps. Leaked on purpose: sets with static
// storage may outlive any static table.
struct InternTable {
  std::recursive_mutex mutex;
  std::unordered_multimap<std::size_t, std::pair<const void*, std::weak_ptr<const void>>> nodes;
};

InternTable& interned() {
  static auto* table = new InternTable;
  return *table;
}

}  // namespace

// --- HFSet ------------------------------------------------------------------

HFSet HFSet::from_sorted(std::vector<HFSet> sorted) {
  if (sorted.empty()) return HFSet{};
  std::size_t h = kEmptyHash;
  std::size_t r = 0;
  for (const auto& e : sorted) {
    h = mix(h, e.hash());
    r = std::max(r, e.rank() + 1);
  }
  auto& table = interned();
  // Declared before the lock: a candidate whose last owner goes away while we
  // look must run its deleter (which takes the lock) after we release it.
  std::vector<std::shared_ptr<const void>> seen;
  std::lock_guard lock(table.mutex);
  auto [lo, hi] = table.nodes.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    auto p = std::static_pointer_cast<const Node>(it->second.second.lock());
    if (!p) continue;
    seen.push_back(p);
    if (p->elements.size() == sorted.size() &&
        std::equal(sorted.begin(), sorted.end(), p->elements.begin(),
                   [](const HFSet& a, const HFSet& b) { return a.node_ == b.node_; })) {
      return HFSet(std::move(p));
    }
  }
  std::shared_ptr<const Node> node(new Node{std::move(sorted), h, r}, [](const Node* n) {
    {
      auto& t = interned();
      std::lock_guard guard(t.mutex);
      auto [first, last] = t.nodes.equal_range(n->hash);
      for (auto it = first; it != last; ++it) {
        if (it->second.first == n) {
          t.nodes.erase(it);
          break;
        }
      }
    }
    delete n;
  });
  table.nodes.emplace(h, std::make_pair(static_cast<const void*>(node.get()), std::weak_ptr<const void>(node)));
  return HFSet(std::move(node));
}

HFSet HFSet::of(std::vector<HFSet> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return from_sorted(std::move(elements));
}

std::span<const HFSet> HFSet::elements() const noexcept {
  if (!node_) return {};
  return node_->elements;
}

bool HFSet::contains(const HFSet& x) const {
  auto els = elements();
  return std::binary_search(els.begin(), els.end(), x);
}

bool operator==(const HFSet& a, const HFSet& b) { return a.node_ == b.node_; }

std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  // Sets of smaller rank sit in an initial segment of the Ackermann order.
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  auto x = a.elements();
  auto y = b.elements();
  std::size_t i = x.size();
  std::size_t j = y.size();
  while (i > 0 && j > 0) {
    auto c = x[i - 1] <=> y[j - 1];
    if (c != 0) return c;
    --i;
    --j;
  }
  return i <=> j;
}

// --- Basic constructors -----------------------------------------------------

HFSet empty() { return HFSet{}; }

HFSet singleton(const HFSet& x) { return HFSet::of({x}); }

HFSet pair(const HFSet& x, const HFSet& y) { return HFSet::of({x, y}); }

HFSet kpair(const HFSet& x, const HFSet& y) { return pair(singleton(x), pair(x, y)); }

HFSet triple(const HFSet& x, const HFSet& y, const HFSet& z) { return kpair(kpair(x, y), z); }

std::optional<std::pair<HFSet, HFSet>> kpair_parts(const HFSet& p) {
  auto els = p.elements();
  if (els.size() == 1) {
    if (els[0].size() != 1) return std::nullopt;
    const HFSet& a = els[0].elements()[0];
    return std::make_pair(a, a);
  }
  if (els.size() != 2) return std::nullopt;
  const HFSet* single = nullptr;
  const HFSet* doubleton = nullptr;
  for (const auto& e : els) {
    if (e.size() == 1) single = &e;
    if (e.size() == 2) doubleton = &e;
  }
  if (single == nullptr || doubleton == nullptr) return std::nullopt;
  const HFSet& a = single->elements()[0];
  if (!doubleton->contains(a)) return std::nullopt;
  auto d = doubleton->elements();
  const HFSet& b = d[0] == a ? d[1] : d[0];
  return std::make_pair(a, b);
}

// --- Boolean and Zermelo operations -----------------------------------------

HFSet union_of(const HFSet& x) {
  std::vector<HFSet> out;
  for (const auto& e : x.elements()) {
    auto m = e.elements();
    out.insert(out.end(), m.begin(), m.end());
  }
  return HFSet::of(std::move(out));
}

HFSet unite(const HFSet& x, const HFSet& y) {
  std::vector<HFSet> out;
  out.reserve(x.size() + y.size());
  auto a = x.elements();
  auto b = y.elements();
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return HFSet::from_sorted(std::move(out));
}

HFSet inter(const HFSet& x, const HFSet& y) {
  std::vector<HFSet> out;
  auto a = x.elements();
  auto b = y.elements();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return HFSet::from_sorted(std::move(out));
}

HFSet diff(const HFSet& x, const HFSet& y) {
  std::vector<HFSet> out;
  auto a = x.elements();
  auto b = y.elements();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return HFSet::from_sorted(std::move(out));
}

HFSet power(const HFSet& x, const Budget& budget) {
  auto els = x.elements();
  if (els.size() >= 63 || (std::size_t{1} << els.size()) > budget.max_elements) {
    throw BudgetError("power set of a " + std::to_string(els.size()) + "-element set exceeds the budget of " +
                      std::to_string(budget.max_elements) + " elements");
  }
  std::vector<HFSet> subsets;
  const std::size_t count = std::size_t{1} << els.size();
  subsets.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<HFSet> members;
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(els[i]);
    }
    subsets.push_back(HFSet::of(std::move(members)));
  }
  return HFSet::of(std::move(subsets));
}

HFSet product(const HFSet& x, const HFSet& y) {
  std::vector<HFSet> out;
  out.reserve(x.size() * y.size());
  for (const auto& u : x.elements()) {
    for (const auto& v : y.elements()) out.push_back(kpair(u, v));
  }
  return HFSet::of(std::move(out));
}

bool is_subset(const HFSet& x, const HFSet& y) {
  auto a = x.elements();
  auto b = y.elements();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_transitive(const HFSet& x) {
  return std::all_of(x.elements().begin(), x.elements().end(), [&](const HFSet& e) { return is_subset(e, x); });
}

HFSet tc(const HFSet& x) {
  // TC(x) = x u U{TC(e) : e in x}; collect everything reachable below x.
  std::unordered_set<HFSet> seen;
  std::vector<HFSet> stack(x.elements().begin(), x.elements().end());
  while (!stack.empty()) {
    HFSet e = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(e).second) continue;
    for (const auto& m : e.elements()) {
      if (!seen.contains(m)) stack.push_back(m);
    }
  }
  return HFSet::of(std::vector<HFSet>(seen.begin(), seen.end()));
}

// --- Naturals, rank, stages -------------------------------------------------

HFSet vn_nat(std::size_t n) {
  std::vector<HFSet> members;
  members.reserve(n);
  HFSet current;
  for (std::size_t k = 0; k < n; ++k) {
    members.push_back(current);
    // von Neumann naturals are ascending in the Ackermann order.
    current = HFSet::of(members);
  }
  return current;
}

std::optional<std::size_t> nat_of(const HFSet& x) {
  // x is the natural n iff its members are exactly 0, 1, ..., n-1 in order;
  // member k then has to equal vn_nat(k), which is checked by size recursion.
  auto els = x.elements();
  for (std::size_t k = 0; k < els.size(); ++k) {
    if (els[k].size() != k) return std::nullopt;
    auto inner = els[k].elements();
    if (!std::equal(inner.begin(), inner.end(), els.begin())) return std::nullopt;
  }
  return els.size();
}

std::size_t rank_in(const HFSet& x) { return x.rank(); }

HFSet v_stage(std::size_t n, const Budget& budget) {
  if (n > 4) {
    throw BudgetError("V_" + std::to_string(n) + " is not materialized (limit is V_4)");
  }
  HFSet v;
  for (std::size_t k = 0; k < n; ++k) v = power(v, budget);
  return v;
}

BigInt v_size(std::size_t n) {
  if (n > 6) throw BudgetError("|V_" + std::to_string(n) + "| is a tower of exponentials too large to represent");
  BigInt size = 0;
  for (std::size_t k = 0; k < n; ++k) {
    BigInt next = 0;
    bit_set(next, static_cast<unsigned>(size));
    size = next;
  }
  return size;
}

// --- Goedel operations ------------------------------------------------------

HFSet goedel_op(int i, const HFSet& x, const HFSet& y) {
  switch (i) {
    case 0:
      return x;
    case 1:
      return diff(x, y);
    case 2:
      return pair(x, y);
    case 3: {
      std::vector<HFSet> out;
      for (const auto& u : x.elements()) {
        for (const auto& v : y.elements()) {
          if (v.contains(u)) out.push_back(kpair(u, v));
        }
      }
      return HFSet::of(std::move(out));
    }
    case 4: {
      std::vector<HFSet> out;
      for (const auto& e : x.elements()) {
        if (auto p = kpair_parts(e)) out.push_back(kpair(p->second, p->first));
      }
      return HFSet::of(std::move(out));
    }
    case 5: {
      std::vector<HFSet> out;
      for (const auto& e : x.elements()) {
        if (auto p = kpair_parts(e)) out.push_back(p->first);
      }
      return HFSet::of(std::move(out));
    }
    case 6:
      return product(x, y);
    case 7:
      return union_of(x);
    case 8: {
      // <<u,v>,w> -> <<w,u>,v>
      std::vector<HFSet> out;
      for (const auto& e : x.elements()) {
        auto outer = kpair_parts(e);
        if (!outer) continue;
        auto inner = kpair_parts(outer->first);
        if (!inner) continue;
        out.push_back(triple(outer->second, inner->first, inner->second));
      }
      return HFSet::of(std::move(out));
    }
    default:
      throw DomainError("Goedel operation index must be in 0..8, got " + std::to_string(i));
  }
}

HFSet goedel_ext(const HFSet& x, const Budget& budget) {
  const std::size_t n = x.size();
  if (n != 0 && 9 * n * n > budget.max_elements) {
    throw BudgetError("Goedel extension of a " + std::to_string(n) + "-element set exceeds the budget of " +
                      std::to_string(budget.max_elements) + " elements");
  }
  std::vector<HFSet> out;
  out.reserve(9 * n * n);
  for (const auto& u : x.elements()) {
    for (const auto& v : x.elements()) {
      for (int i = 0; i <= 8; ++i) out.push_back(goedel_op(i, u, v));
    }
  }
  return HFSet::of(std::move(out));
}

HFSet goedel_hull(const HFSet& x, std::size_t n, const Budget& budget) {
  HFSet current = x;
  for (std::size_t k = 0; k < n; ++k) current = goedel_ext(current, budget);
  return current;
}

GoedelTree::GoedelTree(std::size_t height, std::vector<std::uint8_t> labels)
    : height_(height), labels_(std::move(labels)) {
  if (height >= 32) throw DomainError("Goedel tree height too large");
  if (labels_.size() != (std::size_t{1} << height) - 1) {
    throw DomainError("a Goedel tree of height " + std::to_string(height) + " needs " +
                      std::to_string((std::size_t{1} << height) - 1) + " labels, got " +
                      std::to_string(labels_.size()));
  }
  for (auto l : labels_) {
    if (l > 8) throw DomainError("Goedel tree labels must lie in 0..8");
  }
}

std::uint8_t GoedelTree::label(std::string_view path) const {
  if (path.size() >= height_) throw DomainError("path outside the labeled tree");
  std::size_t i = 0;
  for (char c : path) {
    if (c != '0' && c != '1') throw DomainError("tree paths are strings over {0,1}");
    i = 2 * i + 1 + static_cast<std::size_t>(c - '0');
  }
  return labels_[i];
}

GoedelTree GoedelTree::subtree(int k) const {
  if (height_ == 0) throw DomainError("the empty tree has no subtrees");
  std::vector<std::uint8_t> sub;
  sub.reserve((std::size_t{1} << (height_ - 1)) - 1);
  // Level by level, the k-subtree occupies one contiguous half of each level.
  for (std::size_t level = 1; level < height_; ++level) {
    const std::size_t first = (std::size_t{1} << level) - 1;
    const std::size_t half = std::size_t{1} << (level - 1);
    const std::size_t start = first + static_cast<std::size_t>(k) * half;
    sub.insert(sub.end(), labels_.begin() + static_cast<std::ptrdiff_t>(start),
               labels_.begin() + static_cast<std::ptrdiff_t>(start + half));
  }
  return GoedelTree(height_ - 1, std::move(sub));
}

std::uint64_t GoedelTree::labeling_count(std::size_t height) {
  std::uint64_t count = 1;
  const std::size_t nodes = (std::size_t{1} << height) - 1;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (count > UINT64_MAX / 9) throw BudgetError("too many labelings to enumerate");
    count *= 9;
  }
  return count;
}

GoedelTree GoedelTree::nth(std::size_t height, std::uint64_t index) {
  const std::size_t nodes = (std::size_t{1} << height) - 1;
  std::vector<std::uint8_t> labels(nodes);
  for (std::size_t i = nodes; i-- > 0;) {
    labels[i] = static_cast<std::uint8_t>(index % 9);
    index /= 9;
  }
  return GoedelTree(height, std::move(labels));
}

namespace {

HFSet eval_tree(std::span<const std::uint8_t> labels, std::size_t node, std::size_t height,
                std::span<const HFSet> x) {
  if (height == 0) return x[0];
  const std::size_t half = x.size() / 2;
  HFSet left = eval_tree(labels, 2 * node + 1, height - 1, x.first(half));
  HFSet right = eval_tree(labels, 2 * node + 2, height - 1, x.subspan(half));
  return goedel_op(labels[node], left, right);
}

}  // namespace

HFSet goedel_tree_eval(const GoedelTree& tree, std::span<const HFSet> x) {
  const std::size_t arity = std::size_t{1} << tree.height();
  if (x.size() != arity) {
    throw DomainError("a Goedel tree of height " + std::to_string(tree.height()) + " takes " +
                      std::to_string(arity) + " arguments, got " + std::to_string(x.size()));
  }
  return eval_tree(tree.labels(), 0, tree.height(), x);
}

// --- Cantor diagonal --------------------------------------------------------

HFSet cantor_diagonal(const std::map<HFSet, HFSet>& f, const HFSet& x) {
  if (f.size() != x.size()) throw PreconditionError("map domain does not match the members of x");
  std::vector<HFSet> out;
  for (const auto& z : x.elements()) {
    auto it = f.find(z);
    if (it == f.end()) throw PreconditionError("map is undefined at " + to_string(z));
    if (!is_subset(it->second, x)) throw PreconditionError("map value " + to_string(it->second) + " is not a subset of x");
    if (!it->second.contains(z)) out.push_back(z);
  }
  return HFSet::of(std::move(out));
}

// --- Ackermann coding -------------------------------------------------------

BigInt ackermann_encode(const HFSet& x) {
  // Bit positions are machine-sized; codes past 2^26 bits are refused.
  constexpr unsigned kMaxBit = 1u << 26;
  BigInt code = 0;
  for (const auto& e : x.elements()) {
    BigInt pos = ackermann_encode(e);
    if (pos >= kMaxBit) throw BudgetError("Ackermann code of " + to_string(x) + " is too large to materialize");
    bit_set(code, static_cast<unsigned>(pos));
  }
  return code;
}

HFSet ackermann_decode(const BigInt& n) {
  if (n < 0) throw DomainError("Ackermann codes are natural numbers");
  std::vector<HFSet> members;
  if (n == 0) return HFSet{};
  const unsigned top = msb(n);
  for (unsigned i = 0; i <= top; ++i) {
    if (bit_test(n, i)) members.push_back(ackermann_decode(BigInt(i)));
  }
  return HFSet::of(std::move(members));
}

// --- Text form --------------------------------------------------------------

namespace {

void print(const HFSet& x, std::string& out) {
  out.push_back('{');
  bool first = true;
  for (const auto& e : x.elements()) {
    if (!first) out.push_back(',');
    first = false;
    print(e, out);
  }
  out.push_back('}');
}

class SetReader {
 public:
  explicit SetReader(std::string_view text) : text_(text) {}

  HFSet read_all() {
    HFSet s = read_set();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input", {"end of input"});
    return s;
  }

 private:
  HFSet read_set() {
    skip_space();
    expect('{');
    std::vector<HFSet> members;
    skip_space();
    if (peek() == '}') {
      ++pos_;
      return HFSet{};
    }
    for (;;) {
      members.push_back(read_set());
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    return HFSet::of(std::move(members));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      if (c == '}') fail("unexpected character", {",", "}"});
      fail("unexpected character", {std::string(1, c)});
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw SyntaxError(what, 1, static_cast<int>(pos_) + 1, std::move(expected));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const HFSet& x) {
  std::string out;
  print(x, out);
  return out;
}

HFSet parse_hfset(std::string_view text) { return SetReader(text).read_all(); }

}  // namespace settheory::hf
