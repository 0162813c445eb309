#include "settheory/wforder.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace settheory::wf {

FinDigraph::FinDigraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_node(std::to_string(i));
}

std::size_t FinDigraph::add_node(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const std::size_t i = names_.size();
  names_.push_back(key);
  index_.emplace(std::move(key), i);
  preds_.emplace_back();
  succs_.emplace_back();
  return i;
}

void FinDigraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw DomainError("edge endpoint is not a node");
  if (from == to) {
    auto it = std::lower_bound(loops_.begin(), loops_.end(), from);
    if (it == loops_.end() || *it != from) loops_.insert(it, from);
    return;
  }
  auto& p = preds_[to];
  auto it = std::lower_bound(p.begin(), p.end(), from);
  if (it != p.end() && *it == from) return;
  p.insert(it, from);
  auto& s = succs_[from];
  s.insert(std::lower_bound(s.begin(), s.end(), to), to);
}

void FinDigraph::add_edge(std::string_view from, std::string_view to) {
  const std::size_t a = add_node(from);
  const std::size_t b = add_node(to);
  add_edge(a, b);
}

std::optional<std::size_t> FinDigraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FinDigraph::has_edge(std::size_t from, std::size_t to) const {
  if (from == to) return std::binary_search(loops_.begin(), loops_.end(), from);
  const auto& p = preds_.at(to);
  return std::binary_search(p.begin(), p.end(), from);
}

std::vector<std::pair<std::size_t, std::size_t>> FinDigraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (std::binary_search(loops_.begin(), loops_.end(), x)) out.emplace_back(x, x);
    for (std::size_t y : succs_[x]) out.emplace_back(x, y);
  }
  return out;
}

FinDigraph FinDigraph::parse_edge_list(std::string_view text) {
  FinDigraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(fields >> a) || a[0] == '#') continue;
    if (!(fields >> b)) {
      g.add_node(a);
      continue;
    }
    if (fields >> extra) throw SyntaxError("edge lines hold two node names", line_no, 1, {"newline"});
    g.add_edge(a, b);
  }
  return g;
}

FinDigraph FinDigraph::parse_adjacency_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("adjacency JSON: ") + e.what(), 1, static_cast<int>(e.byte), {});
  }
  if (!doc.is_object()) throw SyntaxError("adjacency JSON must be an object", 1, 1, {"{"});
  FinDigraph g;
  for (const auto& [name, targets] : doc.items()) {
    g.add_node(name);
    if (!targets.is_array()) throw SyntaxError("successor list of '" + name + "' must be an array", 1, 1, {"["});
    for (const auto& t : targets) {
      if (!t.is_string()) throw SyntaxError("node names must be strings", 1, 1, {"string"});
      g.add_edge(name, t.get<std::string>());
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> topological_order(const FinDigraph& g) {
  std::vector<std::size_t> pending(g.size());
  std::deque<std::size_t> ready;
  for (std::size_t x = 0; x < g.size(); ++x) {
    pending[x] = g.predecessors(x).size();
    if (pending[x] == 0) ready.push_back(x);
  }
  std::vector<std::size_t> order;
  order.reserve(g.size());
  while (!ready.empty()) {
    const std::size_t x = ready.front();
    ready.pop_front();
    order.push_back(x);
    for (std::size_t y : g.successors(x)) {
      if (--pending[y] == 0) ready.push_back(y);
    }
  }
  if (order.size() != g.size()) return std::nullopt;
  return order;
}

bool is_well_founded(const FinDigraph& g) { return topological_order(g).has_value(); }

std::vector<std::size_t> rank_map(const FinDigraph& g) {
  auto order = topological_order(g);
  if (!order) throw NotWellFoundedError("rank is defined only on well-founded relations");
  std::vector<std::size_t> rank(g.size(), 0);
  for (std::size_t x : *order) {
    for (std::size_t y : g.predecessors(x)) rank[x] = std::max(rank[x], rank[y] + 1);
  }
  return rank;
}

std::size_t order_type(const FinDigraph& g) {
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (g.has_edge(x, x)) throw NotWellOrderError("irreflexivity", {g.name(x)});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : g.successors(x)) {
      for (std::size_t z : g.successors(y)) {
        if (!g.has_edge(x, z)) throw NotWellOrderError("transitivity", {g.name(x), g.name(y), g.name(z)});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!g.has_edge(x, y) && !g.has_edge(y, x)) throw NotWellOrderError("totality", {g.name(x), g.name(y)});
    }
  }
  // A finite strict linear order is well-founded and its rank map is a
  // bijection onto {0, ..., n-1}.
  return n;
}

bool is_extensional(const FinDigraph& g) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto p = g.predecessors(x);
    if (!seen.emplace(p.begin(), p.end()).second) return false;
  }
  return true;
}

Collapse mostowski(const FinDigraph& g) {
  auto order = topological_order(g);
  if (!order) throw NotWellFoundedError("the collapse is defined only on well-founded relations");
  Collapse c;
  c.image = recursion_fold<hf::HFSet>(
      g, [](std::size_t, std::span<const hf::HFSet> below) { return hf::HFSet::of({below.begin(), below.end()}); },
      *order);
  c.is_iso = is_extensional(g);
  return c;
}

FinDigraph membership_digraph(const hf::HFSet& x) {
  FinDigraph g;
  auto members = x.elements();
  for (const auto& m : members) g.add_node(hf::to_string(m));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (members[j].contains(members[i])) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

using Layer = std::set<std::string>;

void check_injection(const FinInjection& f, const std::map<std::string, std::string>& codomain, const char* label) {
  std::set<std::string> seen;
  for (const auto& [x, y] : f.forward) {
    if (!codomain.contains(y)) {
      throw PreconditionError(std::string(label) + " maps " + x + " to " + y + ", outside the other carrier");
    }
    if (!seen.insert(y).second) throw NotInjectiveError(std::string(label) + " is not injective: two points reach " + y);
  }
}

Layer image(const FinInjection& f, const Layer& s) {
  Layer out;
  for (const auto& x : s) out.insert(f.forward.at(x));
  return out;
}

}  // namespace

std::map<std::string, std::optional<std::size_t>> cbs_layers(const FinInjection& f, const FinInjection& g) {
  check_injection(f, g.forward, "f");
  check_injection(g, f.forward, "g");

  Layer x0;
  for (const auto& [x, _] : f.forward) x0.insert(x);
  Layer y0;
  for (const auto& [y, _] : g.forward) y0.insert(y);

  // X_{n+2} = (g o f)[X_n]; the chain is decreasing and, on a finite carrier,
  // constant after at most 2|X| + 2 steps.
  std::vector<Layer> layers{x0, image(g, y0)};
  const std::size_t bound = 2 * x0.size() + 4;
  while (layers.size() < bound) {
    layers.push_back(image(g, image(f, layers[layers.size() - 2])));
  }
  const Layer& core = layers.back();

  std::map<std::string, std::optional<std::size_t>> out;
  for (const auto& x : x0) {
    if (core.contains(x)) {
      out.emplace(x, std::nullopt);
      continue;
    }
    std::size_t n = 0;
    while (n + 1 < layers.size() && layers[n + 1].contains(x)) ++n;
    out.emplace(x, n);
  }
  return out;
}

FinInjection cbs_bijection(const FinInjection& f, const FinInjection& g) {
  auto layers = cbs_layers(f, g);
  std::map<std::string, std::string> g_inverse;
  for (const auto& [y, x] : g.forward) g_inverse.emplace(x, y);
  FinInjection h;
  for (const auto& [x, layer] : layers) {
    const bool odd = layer && (*layer % 2 == 1);
    h.forward.emplace(x, odd ? g_inverse.at(x) : f.forward.at(x));
  }
  return h;
}

}  // namespace settheory::wf
