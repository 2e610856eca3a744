#include "posetglue/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace posetglue {

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

namespace {

void require_nonempty(const Poset& p) {
  if (p.empty()) throw Error(ErrorKind::EmptyPoset, "operation requires a nonempty poset");
}

}  // namespace

Poset Poset::build(const std::vector<NodeId>& nodes, const Relation& relation) {
  std::vector<NodeId> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorKind::DuplicateNode, "node '" + *dup + "' listed twice");
  }
  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(relation.size());
  for (const auto& [a, b] : relation) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      const NodeId& missing = ia == index.end() ? a : b;
      throw Error(ErrorKind::DanglingNode, "relation pair (" + a + ", " + b +
                                               ") references unknown node '" + missing + "'");
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(sorted), pairs);
}

Poset Poset::build(const NodeSet& nodes, const Relation& relation) {
  return build(std::vector<NodeId>(nodes.begin(), nodes.end()), relation);
}

Poset Poset::from_indices(std::vector<NodeId> nodes,
                          const std::vector<std::pair<std::size_t, std::size_t>>& relation) {
  // Callers outside build() may pass unsorted ids; normalize through a permutation.
  const std::size_t n = nodes.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  Poset p;
  p.ids_.resize(n);
  for (std::size_t r = 0; r < n; ++r) p.ids_[r] = std::move(nodes[order[r]]);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.ids_[i], i).second) {
      throw Error(ErrorKind::DuplicateNode, "node '" + p.ids_[i] + "' listed twice");
    }
  }

  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : relation) {
    if (a >= n || b >= n) throw Error(ErrorKind::DanglingNode, "relation index out of range");
    if (a == b) continue;
    succ[rank[a]].push_back(rank[b]);
  }

  // Kahn's algorithm; leftover nodes sit on a cycle.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& s : succ)
    for (auto b : s) ++indeg[b];
  std::vector<std::size_t> topo;
  topo.reserve(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (auto w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (topo.size() != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (indeg[i] != 0) {
        throw Error(ErrorKind::CycleDetected, "relation has a directed cycle through '" + p.ids_[i] + "'");
      }
    }
  }

  p.closure_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    auto v = *it;
    p.closure_[v].set(v);
    for (auto w : succ[v]) p.closure_[v] |= p.closure_[w];
  }

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool interposed = false;
      for (std::size_t c = 0; c < n && !interposed; ++c) {
        interposed = c != a && c != b && p.leq(a, c) && p.leq(c, b);
      }
      if (!interposed) {
        p.covers_.emplace_back(a, b);
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
      }
    }
  }
  return p;
}

bool Poset::contains(const NodeId& id) const { return index_.count(id) != 0; }

std::size_t Poset::index_of(const NodeId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorKind::UnknownNode, "no node '" + id + "'");
  return it->second;
}

bool Poset::covers(std::size_t a, std::size_t b) const {
  const auto& ups = up_[a];
  return std::binary_search(ups.begin(), ups.end(), b);
}

Relation Poset::cover_pairs() const {
  Relation out;
  out.reserve(covers_.size());
  for (auto [a, b] : covers_) out.emplace_back(ids_[a], ids_[b]);
  return out;
}

std::vector<std::size_t> min_indices(const Poset& p) {
  require_nonempty(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.lower_covers(i).empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> max_indices(const Poset& p) {
  require_nonempty(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.upper_covers(i).empty()) out.push_back(i);
  return out;
}

NodeSet min_nodes(const Poset& p) {
  NodeSet out;
  for (auto i : min_indices(p)) out.insert(p.id(i));
  return out;
}

NodeSet max_nodes(const Poset& p) {
  NodeSet out;
  for (auto i : max_indices(p)) out.insert(p.id(i));
  return out;
}

namespace {

// Longest-path labels over the Hasse diagram; `downward` selects heights
// (paths from below) versus coheights (paths to above).
std::vector<std::size_t> longest_paths(const Poset& p, bool downward) {
  const std::size_t n = p.size();
  std::vector<std::size_t> value(n, 0);
  std::vector<bool> done(n, false);
  std::function<std::size_t(std::size_t)> visit = [&](std::size_t v) -> std::size_t {
    if (done[v]) return value[v];
    std::size_t best = 0;
    const auto& next = downward ? p.lower_covers(v) : p.upper_covers(v);
    for (auto w : next) best = std::max(best, visit(w) + 1);
    done[v] = true;
    value[v] = best;
    return best;
  };
  for (std::size_t i = 0; i < n; ++i) visit(i);
  return value;
}

}  // namespace

std::vector<std::size_t> heights(const Poset& p) {
  require_nonempty(p);
  return longest_paths(p, true);
}

std::vector<std::size_t> coheights(const Poset& p) {
  require_nonempty(p);
  return longest_paths(p, false);
}

std::size_t height(const Poset& p, const NodeId& x) {
  require_nonempty(p);
  return heights(p)[p.index_of(x)];
}

std::size_t coheight(const Poset& p, const NodeId& x) {
  require_nonempty(p);
  return coheights(p)[p.index_of(x)];
}

std::size_t dim(const Poset& p) {
  auto h = heights(p);
  return *std::max_element(h.begin(), h.end());
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  Chain current;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    current.push_back(p.id(v));
    if (p.upper_covers(v).empty()) {
      out.push_back(current);
    } else {
      for (auto w : p.upper_covers(v)) walk(w);
    }
    current.pop_back();
  };
  for (auto m : min_indices(p)) walk(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_longest_chains(const Poset& p) {
  // Counted by dynamic programming rather than enumeration.
  const auto h = heights(p);
  const std::size_t d = *std::max_element(h.begin(), h.end());
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return h[a] < h[b]; });
  // ways[v]: number of chains of length h[v] from a minimal node to v
  std::vector<std::size_t> ways(p.size(), 0);
  for (auto v : order) {
    if (h[v] == 0) {
      ways[v] = 1;
      continue;
    }
    for (auto w : p.lower_covers(v))
      if (h[w] + 1 == h[v]) ways[v] += ways[w];
  }
  std::size_t total = 0;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (h[v] == d) total += ways[v];
  return total;
}

namespace {

std::vector<std::size_t> indices_of(const Poset& p, const NodeSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (const auto& id : s) out.push_back(p.index_of(id));
  return out;
}

}  // namespace

bool is_antichain(const Poset& p, const NodeSet& s) {
  auto idx = indices_of(p, s);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (p.comparable(idx[i], idx[j])) return false;
  return true;
}

bool is_complete_subset(const Poset& p, const NodeSet& s) {
  auto idx = indices_of(p, s);
  std::vector<bool> member(p.size(), false);
  for (auto i : idx) member[i] = true;
  for (auto u : idx)
    for (auto v : idx) {
      if (!p.leq(u, v)) continue;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (!member[y] && p.leq(u, y) && p.leq(y, v)) return false;
    }
  return true;
}

NodeSet down_set(const Poset& p, const NodeId& x) {
  auto xi = p.index_of(x);
  NodeSet out;
  for (std::size_t u = 0; u < p.size(); ++u)
    if (p.leq(u, xi)) out.insert(p.id(u));
  return out;
}

NodeSet up_set(const Poset& p, const NodeId& x) {
  auto xi = p.index_of(x);
  NodeSet out;
  for (std::size_t u = 0; u < p.size(); ++u)
    if (p.leq(xi, u)) out.insert(p.id(u));
  return out;
}

NodeId fresh_id(const NodeId& base, const NodeSet& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    NodeId candidate = base + "~" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

Poset induced(const Poset& p, const NodeSet& s) {
  auto idx = indices_of(p, s);
  std::vector<NodeId> ids;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    ids.push_back(p.id(idx[i]));
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (i != j && p.leq(idx[i], idx[j])) rel.emplace_back(i, j);
  }
  return Poset::from_indices(std::move(ids), rel);
}

Poset relabel(const Poset& p, const std::map<NodeId, NodeId>& rename) {
  std::vector<NodeId> ids;
  ids.reserve(p.size());
  for (const auto& id : p.nodes()) {
    auto it = rename.find(id);
    if (it == rename.end()) throw Error(ErrorKind::NotTotal, "relabel misses node '" + id + "'");
    ids.push_back(it->second);
  }
  return Poset::from_indices(std::move(ids), p.cover_indices());
}

}  // namespace posetglue
