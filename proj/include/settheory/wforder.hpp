#pragma once

#include "settheory/errors.hpp"
#include "settheory/hfset.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace settheory::wf {

// A finite relation R on named nodes. An edge (x, y) means <x,y> in R, read
// "x precedes y". Nodes are addressed by dense indices in insertion order.
//
// The strict predecessors of y are {x : (x,y) in R, x != y}; a self-loop
// contributes nothing to them.
class FinDigraph {
 public:
  FinDigraph() = default;
  // Nodes named "0" .. "n-1".
  explicit FinDigraph(std::size_t n);

  // Returns the index of `name`, adding the node if it is new.
  std::size_t add_node(std::string_view name);
  // Duplicate edges are ignored.
  void add_edge(std::size_t from, std::size_t to);
  void add_edge(std::string_view from, std::string_view to);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool has_edge(std::size_t from, std::size_t to) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Strict predecessors / successors, ascending.
  std::span<const std::size_t> predecessors(std::size_t i) const { return preds_.at(i); }
  std::span<const std::size_t> successors(std::size_t i) const { return succs_.at(i); }

  // "a b" per line; blank lines and lines starting with '#' are skipped. A
  // line with a single name declares an isolated node.
  static FinDigraph parse_edge_list(std::string_view text);
  // {"a": ["b", "c"], "b": []}: each key lists its successors.
  static FinDigraph parse_adjacency_json(std::string_view text);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
  std::vector<std::size_t> loops_;
};

// Kahn peeling over strict predecessors: every node with no unpeeled strict
// predecessor is removed in turn. Returns the order of removal, or nothing if
// some node is never freed (a cycle through distinct nodes).
std::optional<std::vector<std::size_t>> topological_order(const FinDigraph& g);

bool is_well_founded(const FinDigraph& g);

// rank(x) = sup{rank(y)+1 : y strict predecessor of x}, indexed by node.
std::vector<std::size_t> rank_map(const FinDigraph& g);

// The order type of a finite strict well-order, i.e. its size. Throws
// NotWellOrderError naming the first failed axiom (irreflexivity,
// transitivity, totality) with a witness.
std::size_t order_type(const FinDigraph& g);

// G(x) = step(x, [G(y) : y strict predecessor of x]), evaluated along
// `order`, which must list every node after all of its strict predecessors.
template <class T>
std::vector<T> recursion_fold(const FinDigraph& g, const std::function<T(std::size_t, std::span<const T>)>& step,
                              std::span<const std::size_t> order) {
  if (order.size() != g.size()) throw PreconditionError("evaluation order must list every node once");
  std::vector<std::optional<T>> value(g.size());
  for (std::size_t x : order) {
    if (x >= g.size() || value[x]) throw PreconditionError("evaluation order must list every node once");
    std::vector<T> children;
    for (std::size_t y : g.predecessors(x)) {
      if (!value[y]) throw PreconditionError("evaluation order visits a node before its predecessor");
      children.push_back(*value[y]);
    }
    value[x] = step(x, std::span<const T>(children));
  }
  std::vector<T> out;
  out.reserve(g.size());
  for (auto& v : value) out.push_back(std::move(*v));
  return out;
}

template <class T>
std::vector<T> recursion_fold(const FinDigraph& g, const std::function<T(std::size_t, std::span<const T>)>& step) {
  auto order = topological_order(g);
  if (!order) throw NotWellFoundedError("recursion needs a well-founded relation");
  return recursion_fold<T>(g, step, *order);
}

// No two nodes share the same set of strict predecessors.
bool is_extensional(const FinDigraph& g);

struct Collapse {
  std::vector<hf::HFSet> image;  // indexed by node
  bool is_iso = false;
};

// The Mostowski collapse f(x) = {f(y) : y strict predecessor of x}. `is_iso`
// holds iff g is extensional, in which case f is an isomorphism onto
// (range, membership).
Collapse mostowski(const FinDigraph& g);

// The membership digraph of the members of x: an edge (u, v) iff u in v.
// Node names are the canonical text of each member.
FinDigraph membership_digraph(const hf::HFSet& x);

// An injective finite map.
struct FinInjection {
  std::map<std::string, std::string> forward;
};

// Cantor-Bernstein: from injections f : X -> Y and g : Y -> X (X = dom f,
// Y = dom g) build a bijection h : X -> Y that uses f on the even layers and
// on the common core, and g^-1 on the odd layers.
FinInjection cbs_bijection(const FinInjection& f, const FinInjection& g);

// Layer index of each x in X: the largest n with x in X_n, or nothing when x
// lies in every layer. X_0 = X, X_1 = g[Y], X_{n+2} = (g o f)[X_n].
std::map<std::string, std::optional<std::size_t>> cbs_layers(const FinInjection& f, const FinInjection& g);

}  // namespace settheory::wf
