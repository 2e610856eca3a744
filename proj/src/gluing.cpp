#include "posetglue/gluing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace posetglue {

namespace {

std::string describe(const NodeSet& s) {
  std::string out = "{";
  for (const auto& id : s) {
    if (out.size() > 1) out += ",";
    out += id;
  }
  return out + "}";
}

}  // namespace

GluingWitness glue_along_complete(const Poset& x, const NodeSet& s,
                                  const std::optional<NodeId>& class_name) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "cannot glue along an empty set");
  std::vector<bool> member(x.size(), false);
  for (const auto& id : s) member[x.index_of(id)] = true;
  if (!is_complete_subset(x, s)) throw Error(ErrorKind::NotComplete, describe(s) + " is not a complete subset");

  const NodeId name = class_name.value_or(*s.begin());
  // Class indices: survivors keep their relative order; the glued class is
  // appended and from_indices re-sorts everything by id.
  std::vector<NodeId> ids;
  std::vector<std::size_t> cls(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (member[i]) continue;
    if (x.id(i) == name) {
      throw Error(ErrorKind::InvalidArgument, "class name '" + name + "' collides with a surviving node");
    }
    cls[i] = ids.size();
    ids.push_back(x.id(i));
  }
  const std::size_t glued = ids.size();
  ids.push_back(name);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (member[i]) cls[i] = glued;

  // below_s[v]: v <= some s; above_s[v]: some s <= v.
  std::vector<bool> below_s(x.size(), false), above_s(x.size(), false);
  for (std::size_t v = 0; v < x.size(); ++v)
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (!member[t]) continue;
      if (x.leq(v, t)) below_s[v] = true;
      if (x.leq(t, v)) above_s[v] = true;
    }

  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (cls[a] != cls[b] && (x.leq(a, b) || (below_s[a] && above_s[b]))) rel.emplace_back(cls[a], cls[b]);

  Poset y = Poset::from_indices(ids, rel);
  std::vector<std::size_t> img(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) img[i] = y.index_of(ids[cls[i]]);
  return {PosetMap::from_indices(x, std::move(y), std::move(img)), Collection{s}};
}

Collection merge_overlapping(const Collection& c) {
  std::vector<std::size_t> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<NodeId, std::size_t> owner;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& id : c[i]) {
      auto [it, fresh] = owner.emplace(id, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  std::map<std::size_t, NodeSet> groups;
  for (std::size_t i = 0; i < c.size(); ++i) groups[find(i)].insert(c[i].begin(), c[i].end());
  Collection out;
  for (auto& [root, members] : groups)
    if (!members.empty()) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const NodeSet& a, const NodeSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

GluingWitness glue_along_collection(const Poset& x, const Collection& c) {
  for (const auto& member : c)
    for (const auto& id : member) x.index_of(id);
  const Collection merged = merge_overlapping(c);
  for (const auto& member : merged)
    if (!is_complete_subset(x, member)) {
      throw Error(ErrorKind::NotComplete, describe(member) + " is not a complete subset");
    }

  PosetMap g = identity(x);
  for (const auto& member : merged) {
    NodeSet img;
    for (const auto& id : member) img.insert(g(id));
    if (img.size() < 2) continue;
    if (!is_complete_subset(g.target(), img)) {
      throw Error(ErrorKind::NotComplete,
                  "image " + describe(img) + " of " + describe(member) + " is not complete after earlier gluings");
    }
    auto step = glue_along_complete(g.target(), img);
    g = compose(step.map, g);
  }
  return {std::move(g), c};
}

bool is_height_zero_gluing(const GluingWitness& w) {
  const NodeSet mins = w.source().empty() ? NodeSet{} : min_nodes(w.source());
  for (const auto& member : w.collection)
    if (!std::includes(mins.begin(), mins.end(), member.begin(), member.end())) return false;
  return true;
}

PosetMap induced_map(const GluingWitness& w, const PosetMap& h) {
  const auto& g = w.map;
  if (!(h.source() == g.source())) throw Error(ErrorKind::InvalidArgument, "h must start at the gluing's source");
  if (auto v = is_poset_map(h); !v) throw Error(ErrorKind::NotPosetMap, v.reason);
  const std::size_t none = h.target().size();
  std::vector<std::size_t> phi(g.target().size(), none);
  std::vector<std::size_t> witness(g.target().size(), 0);
  for (std::size_t i = 0; i < g.source().size(); ++i) {
    auto y = g.at(i);
    if (phi[y] == none) {
      phi[y] = h.at(i);
      witness[y] = i;
    } else if (phi[y] != h.at(i)) {
      throw Error(ErrorKind::NotCompatible, "g identifies " + g.source().id(witness[y]) + " and " +
                                                g.source().id(i) + " but h separates them");
    }
  }
  if (std::find(phi.begin(), phi.end(), none) != phi.end()) {
    throw Error(ErrorKind::InvalidArgument, "gluing map is not surjective");
  }
  auto result = PosetMap::from_indices(g.target(), h.target(), std::move(phi));
  if (auto v = is_poset_map(result); !v) {
    throw Error(ErrorKind::InvariantViolation, "induced map is not order preserving: " + v.reason);
  }
  return result;
}

Collection fiber_collection(const PosetMap& g) {
  std::vector<NodeSet> fibers(g.target().size());
  for (std::size_t i = 0; i < g.source().size(); ++i) fibers[g.at(i)].insert(g.source().id(i));
  Collection out;
  for (auto& f : fibers)
    if (f.size() != 1) out.push_back(std::move(f));
  std::erase_if(out, [](const NodeSet& s) { return s.empty(); });
  std::sort(out.begin(), out.end(), [](const NodeSet& a, const NodeSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

Verdict verify_gluing(const PosetMap& g, const Collection& c) {
  const Poset& x = g.source();
  if (auto v = is_poset_map(g); !v) return Verdict::fail("not a poset map: " + v.reason);
  if (!is_surjective(g)) return Verdict::fail("gluing map is not surjective");
  for (const auto& member : c) {
    for (const auto& id : member)
      if (!x.contains(id)) return Verdict::fail("collection member " + describe(member) + " leaves the source");
    NodeSet img;
    for (const auto& id : member) img.insert(g(id));
    if (img.size() > 1) return Verdict::fail("map is not constant on " + describe(member));
  }
  // Overlapping members act as their union, so condition (2) is checked
  // against the merged collection.
  const Collection merged = merge_overlapping(c);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (g.at(a) != g.at(b)) continue;
      bool shared = std::any_of(merged.begin(), merged.end(), [&](const NodeSet& m) {
        return m.count(x.id(a)) && m.count(x.id(b));
      });
      if (!shared) {
        return Verdict::fail("map identifies " + x.id(a) + " and " + x.id(b) + " outside every member",
                             x.id(a), x.id(b));
      }
    }

  GluingWitness canonical;
  try {
    canonical = glue_along_collection(x, c);
  } catch (const Error& e) {
    return Verdict::fail(std::string("no canonical quotient: ") + e.what());
  }
  PosetMap phi;
  try {
    phi = induced_map(canonical, g);
  } catch (const Error& e) {
    return Verdict::fail(std::string("comparison map failed: ") + e.what());
  }
  auto report = classify(phi);
  if (!report.isomorphism) {
    const auto& reason = !report.embedding ? report.embedding.reason : report.isomorphism.reason;
    return Verdict::fail("comparison with the canonical quotient is not an isomorphism: " + reason);
  }
  return Verdict::pass();
}

bool is_c_sequence(const Poset& x, const Collection& c, const CSequence& seq) {
  if (seq.empty()) return false;
  for (const auto& id : seq)
    if (!x.contains(id)) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (x.leq(seq[i], seq[i + 1])) continue;
    bool jump = std::any_of(c.begin(), c.end(),
                            [&](const NodeSet& m) { return m.count(seq[i]) && m.count(seq[i + 1]); });
    if (!jump) return false;
  }
  return true;
}

std::optional<CSequence> find_c_sequence(const Poset& x, const Collection& c, const NodeId& from,
                                         const NodeId& to) {
  const auto s = x.index_of(from);
  const auto t = x.index_of(to);
  const std::size_t n = x.size();
  std::vector<std::size_t> member_of(n, c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& id : c[k]) {
      auto i = x.index_of(id);
      if (member_of[i] != c.size()) {
        throw Error(ErrorKind::OverlappingCollection, "'" + id + "' lies in two collection members");
      }
      member_of[i] = k;
    }

  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if (u == t) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v]) continue;
      bool step = x.leq(u, v) || (member_of[u] != c.size() && member_of[u] == member_of[v]);
      if (!step) continue;
      seen[v] = true;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (!seen[t]) return std::nullopt;
  CSequence seq;
  for (auto v = t; v != n; v = parent[v]) seq.push_back(x.id(v));
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::pair<NodeId, NodeId> lift_cover(const GluingWitness& w, const NodeId& gx, const NodeId& gy) {
  for (const auto& member : w.collection)
    if (!is_antichain(w.source(), member)) {
      throw Error(ErrorKind::NotAntichainCollection, describe(member) + " is not an antichain");
    }
  const auto& y = w.target();
  if (!y.covers(gx, gy)) throw Error(ErrorKind::NotACover, gy + " does not cover " + gx);
  const auto xi = y.index_of(gx);
  const auto yi = y.index_of(gy);
  const auto& x = w.source();
  // cover_indices() is sorted by (lower, upper) index, i.e. by id pair.
  for (auto [a, b] : x.cover_indices())
    if (w.map.at(a) == xi && w.map.at(b) == yi) return {x.id(a), x.id(b)};
  throw Error(ErrorKind::InvariantViolation, "cover " + gx + " < " + gy + " has no lift");
}

DimMinReport check_dim_min_preservation(const GluingWitness& w) {
  if (!is_height_zero_gluing(w)) throw Error(ErrorKind::NotHeightZero, "collection glues non-minimal nodes");
  DimMinReport r;
  r.source_dim = dim(w.source());
  r.target_dim = dim(w.target());
  r.source_min = min_nodes(w.source());
  for (const auto& m : min_nodes(w.target())) {
    auto pre = preimage(w.map, m);
    r.min_preimage.insert(pre.begin(), pre.end());
  }
  if (r.source_dim != r.target_dim) {
    throw Error(ErrorKind::InvariantViolation, "height-zero gluing changed the dimension from " +
                                                   std::to_string(r.source_dim) + " to " +
                                                   std::to_string(r.target_dim));
  }
  if (r.source_min != r.min_preimage) {
    throw Error(ErrorKind::InvariantViolation, "preimage of the minimal nodes differs from the source minima");
  }
  return r;
}

}  // namespace posetglue
