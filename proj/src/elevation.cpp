#include "posetglue/elevation.hpp"

#include <algorithm>
#include <tuple>

namespace posetglue {

namespace {

// z has height one and is the only cover of every node below it.
void require_retractable(const Poset& z_poset, std::size_t zi) {
  const NodeId& z = z_poset.id(zi);
  const auto& below = z_poset.lower_covers(zi);
  bool height_one = !below.empty();
  for (auto w : below) height_one = height_one && z_poset.lower_covers(w).empty();
  if (!height_one) throw Error(ErrorKind::NotHeightOne, "'" + z + "' does not have height one");
  for (auto w : below) {
    if (z_poset.upper_covers(w) != std::vector<std::size_t>{zi}) {
      throw Error(ErrorKind::NotUniqueCover, "'" + z + "' is not the only cover of '" + z_poset.id(w) + "'");
    }
  }
}

}  // namespace

ElevationWitness retract(const Poset& z_poset, const NodeId& z) {
  const auto zi = z_poset.index_of(z);
  require_retractable(z_poset, zi);

  const NodeSet lower = down_set(z_poset, z);
  auto glued = glue_along_complete(z_poset, lower, z);
  const Poset& x = glued.target();

  std::vector<std::size_t> section(x.size());
  for (std::size_t v = 0; v < z_poset.size(); ++v)
    if (!lower.count(z_poset.id(v))) section[glued.map.at(v)] = v;
  section[glued.map.at(zi)] = zi;

  ElevationWitness w{z_poset, z, x, glued.map, PosetMap::from_indices(x, z_poset, std::move(section))};
  if (auto v = verify_elevation(w); !v) throw Error(ErrorKind::InvariantViolation, "retraction: " + v.reason);
  return w;
}

Verdict verify_elevation(const ElevationWitness& w) {
  const Poset& zp = w.z_poset;
  const Poset& xp = w.x_poset;
  if (!zp.contains(w.z)) return Verdict::fail("z is not a node of Z");
  if (!(w.r.source() == zp) || !(w.r.target() == xp)) return Verdict::fail("r does not go from Z to X");
  if (!(w.e.source() == xp) || !(w.e.target() == zp)) return Verdict::fail("e does not go from X to Z");
  try {
    require_retractable(zp, zp.index_of(w.z));
  } catch (const Error& err) {
    return Verdict::fail(err.what());
  }

  const NodeSet lower = down_set(zp, w.z);
  if (auto v = verify_gluing(w.r, Collection{lower}); !v) return Verdict::fail("r is not the gluing of L(z): " + v.reason);
  if (!(compose(w.r, w.e) == identity(xp))) return Verdict::fail("r ∘ e is not the identity");
  if (w.e(w.r(w.z)) != w.z) return Verdict::fail("e does not send r(z) back to z");
  if (auto v = classify(w.e).embedding; !v) return Verdict::fail("e is not an embedding: " + v.reason);

  NodeSet covered = lower;
  for (const auto& id : image(w.e)) covered.insert(id);
  if (covered.size() != zp.size()) return Verdict::fail("Z is not L(z) together with the image of e");

  NodeSet expected_min;
  for (const auto& id : lower)
    if (id != w.z) expected_min.insert(id);
  for (const auto& m : min_nodes(xp))
    if (m != w.r(w.z)) expected_min.insert(w.e(m));
  if (expected_min != min_nodes(zp)) return Verdict::fail("minimal nodes of Z are not min L(z) plus e(min X - r(z))");
  return Verdict::pass();
}

ElevationWitness elevate(const Poset& x, const NodeId& p, std::size_t count, const std::vector<NodeId>& fresh_ids) {
  const auto pi = x.index_of(p);
  if (!x.lower_covers(pi).empty()) throw Error(ErrorKind::NotMinimal, "'" + p + "' is not minimal");
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "elevation needs at least one new node");

  NodeSet taken(x.nodes().begin(), x.nodes().end());
  std::vector<NodeId> fresh;
  if (fresh_ids.empty()) {
    for (std::size_t k = 1; k <= count; ++k) {
      fresh.push_back(fresh_id(p + "~" + std::to_string(k), taken));
      taken.insert(fresh.back());
    }
  } else {
    if (fresh_ids.size() != count) throw Error(ErrorKind::InvalidArgument, "fresh id count differs from count");
    for (const auto& id : fresh_ids) {
      if (id.empty()) throw Error(ErrorKind::InvalidArgument, "fresh ids must be non-empty");
      if (!taken.insert(id).second) throw Error(ErrorKind::InvalidArgument, "fresh id '" + id + "' is already in use");
    }
    fresh = fresh_ids;
  }

  std::vector<NodeId> nodes = x.nodes();
  nodes.insert(nodes.end(), fresh.begin(), fresh.end());
  Relation rel = x.cover_pairs();
  for (const auto& q : fresh) rel.emplace_back(q, p);
  auto w = retract(Poset::build(nodes, rel), p);
  if (!(w.x_poset == x)) throw Error(ErrorKind::InvariantViolation, "retracting the elevation did not give X back");
  return w;
}

std::size_t m_count(const Poset& f, const NodeId& x) {
  const auto xi = f.index_of(x);
  std::size_t m = 0;
  for (auto u : min_indices(f)) {
    if (u == xi || !f.leq(u, xi)) continue;
    if (f.upper_covers(u) != std::vector<std::size_t>{xi}) ++m;
  }
  return m;
}

NodeId choose_pivot(const Poset& f) {
  const auto d = dim(f);
  if (d == 0) throw Error(ErrorKind::ZeroDimensional, "poset has dimension zero");
  const auto h = heights(f);
  const auto ch = coheights(f);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (h[i] == 1 && ch[i] + 1 == d) return f.id(i);
  throw Error(ErrorKind::InvariantViolation, "no height-one node on a longest chain");
}

namespace {

NodeId only_preimage(const PosetMap& f, const NodeId& y) {
  auto pre = preimage(f, y);
  if (pre.size() != 1) throw Error(ErrorKind::InvariantViolation, "'" + y + "' has more than one preimage");
  return *pre.begin();
}

}  // namespace

GExtension gextension_step(const Poset& f1, const GExtensionOptions& options) {
  GExtension g;
  g.f1 = f1;
  g.pivot = choose_pivot(f1);

  Poset f = f1;
  PosetMap h = identity(f1);
  NodeId y = g.pivot;
  for (;;) {
    const auto m = m_count(f, y);
    g.m_trace.push_back(m);
    if (m == 0) break;

    const auto yi = f.index_of(y);
    NodeId u;
    for (auto ui : min_indices(f))
      if (f.leq(ui, yi) && f.upper_covers(ui) != std::vector<std::size_t>{yi}) {
        u = f.id(ui);
        break;
      }

    auto split = split_for_cover(f, u, y);
    NodeId next_y = only_preimage(split.f, y);
    Poset next = split.f_poset;
    PosetMap down = split.f;

    if (options.coalesce_copies) {
      const auto yn = next.index_of(next_y);
      NodeSet under, elsewhere;
      for (const auto& c : preimage(split.f, u)) {
        if (next.upper_covers(next.index_of(c)) == std::vector<std::size_t>{yn}) under.insert(c);
        else elsewhere.insert(c);
      }
      Collection coll;
      for (auto* s : {&under, &elsewhere})
        if (s->size() > 1) coll.push_back(*s);
      if (!coll.empty()) {
        auto cg = glue_along_collection(next, coll);
        down = induced_map(cg, split.f);
        next_y = cg.map(next_y);
        next = cg.target();
      }
    }

    h = compose(h, down);
    f = std::move(next);
    y = std::move(next_y);
    if (m_count(f, y) >= m) throw Error(ErrorKind::InvariantViolation, "splitting did not lower m");
  }

  auto ew = retract(f, y);
  g.z_poset = f;
  g.z = y;
  g.f2 = ew.x_poset;
  g.r = ew.r;
  g.e = ew.e;
  g.h = h;
  if (auto v = verify_gextension(g); !v) throw Error(ErrorKind::InvariantViolation, "G-extension: " + v.reason);
  return g;
}

Verdict verify_gextension(const GExtension& g) {
  if (auto v = verify_elevation(ElevationWitness{g.z_poset, g.z, g.f2, g.r, g.e}); !v) return v;
  if (!(g.h.source() == g.z_poset) || !(g.h.target() == g.f1)) return Verdict::fail("h does not go from Z to F1");
  GluingWitness w{g.h, fiber_collection(g.h)};
  if (!is_height_zero_gluing(w)) return Verdict::fail("h glues non-minimal nodes");
  if (auto v = verify_gluing(w); !v) return Verdict::fail("h is not a gluing: " + v.reason);
  return Verdict::pass();
}

DimensionReduction reduce_dimension(const Poset& f1, const GExtensionOptions& options) {
  DimensionReduction out;
  out.posets.push_back(f1);
  const auto d0 = dim(f1);
  if (d0 == 0) throw Error(ErrorKind::ZeroDimensional, "poset has dimension zero");
  auto key = std::make_pair(d0, count_longest_chains(f1));
  while (dim(out.posets.back()) == d0) {
    auto g = gextension_step(out.posets.back(), options);
    auto next = std::make_pair(dim(g.f2), count_longest_chains(g.f2));
    if (!(next < key)) {
      throw Error(ErrorKind::InvariantViolation,
                  "(dim, longest chains) went from (" + std::to_string(key.first) + ", " + std::to_string(key.second) +
                      ") to (" + std::to_string(next.first) + ", " + std::to_string(next.second) + ")");
    }
    key = next;
    out.posets.push_back(g.f2);
    out.steps.push_back(std::move(g));
  }
  return out;
}

WrapResult wrap(const Poset& x, const WrapOptions& options) {
  if (x.empty()) throw Error(ErrorKind::EmptyPoset, "cannot wrap the empty poset");
  std::vector<NodeId> nodes = x.nodes();
  Relation rel = x.cover_pairs();
  NodeSet taken(nodes.begin(), nodes.end());
  auto add = [&](const std::string& base) {
    NodeId id = fresh_id(base, taken);
    taken.insert(id);
    nodes.push_back(id);
    return id;
  };

  if (options.single_min) {
    const auto len = std::max<std::size_t>(options.min_height, 1);
    NodeId prev;
    for (std::size_t k = 1; k <= len; ++k) {
      NodeId b = add(len == 1 ? std::string("bottom") : "bottom" + std::to_string(k));
      if (!prev.empty()) rel.emplace_back(prev, b);
      prev = b;
    }
    for (const auto& m : min_nodes(x)) rel.emplace_back(prev, m);
  } else if (options.min_height > 0) {
    for (const auto& m : min_nodes(x)) {
      NodeId prev;
      for (std::size_t k = 1; k <= options.min_height; ++k) {
        NodeId b = add(m + ".pad" + std::to_string(k));
        if (!prev.empty()) rel.emplace_back(prev, b);
        prev = b;
      }
      rel.emplace_back(prev, m);
    }
  }

  NodeId top;
  if (options.single_max) {
    top = add("top");
    for (const auto& m : max_nodes(x)) rel.emplace_back(m, top);
  }

  Poset k = Poset::build(nodes, rel);
  const auto d = dim(k);
  if (options.min_dim > d) {
    NodeId anchor = top;
    if (anchor.empty()) {
      const auto h = heights(k);
      for (auto i : max_indices(k))
        if (h[i] == d) {
          anchor = k.id(i);
          break;
        }
    }
    NodeId prev = anchor;
    for (std::size_t j = 1; j <= options.min_dim - d; ++j) {
      NodeId c = add("cap" + std::to_string(j));
      rel.emplace_back(prev, c);
      prev = c;
    }
    k = Poset::build(nodes, rel);
  }

  WrapResult out{k, inclusion(x, k)};
  if (auto v = classify(out.inclusion).saturated_embedding; !v) {
    throw Error(ErrorKind::InvariantViolation, "wrap inclusion: " + v.reason);
  }
  if (auto v = is_saturated_subset(k, NodeSet(x.nodes().begin(), x.nodes().end())); !v) {
    throw Error(ErrorKind::InvariantViolation, "wrap image: " + v.reason);
  }
  return out;
}

}  // namespace posetglue
