#include "posetglue/chains.hpp"

#include <algorithm>

namespace posetglue {

ChainDecomposition chain_decomposition(const Poset& x) {
  const auto maximal = maximal_chains(x);  // throws EmptyPoset
  std::vector<NodeId> ids;
  Relation rel;
  std::map<NodeId, NodeId> assignment;
  ChainDecomposition cd;
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    Chain copy;
    for (std::size_t k = 0; k < maximal[a].size(); ++k) {
      NodeId id = "a" + std::to_string(a) + "." + std::to_string(k);
      if (k > 0) rel.emplace_back(copy.back(), id);
      assignment.emplace(id, maximal[a][k]);
      ids.push_back(id);
      copy.push_back(std::move(id));
    }
    cd.chains.push_back(std::move(copy));
  }
  cd.d = Poset::build(ids, rel);
  cd.phi = PosetMap(cd.d, x, assignment);
  return cd;
}

Verdict verify_chain_decomposition(const ChainDecomposition& cd) {
  const Poset& d = cd.d;
  const Poset& x = cd.target();
  if (!(cd.phi.source() == d)) return Verdict::fail("phi does not start at D");
  if (auto v = is_poset_map(cd.phi); !v) return Verdict::fail("phi is not a poset map: " + v.reason);
  if (!is_surjective(cd.phi)) return Verdict::fail("phi is not surjective");

  // D must be exactly the disjoint sum of the listed chains.
  std::size_t listed = 0;
  Relation expected;
  for (const auto& chain : cd.chains) {
    listed += chain.size();
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) expected.emplace_back(chain[k], chain[k + 1]);
  }
  std::sort(expected.begin(), expected.end());
  if (listed != d.size() || expected != d.cover_pairs()) return Verdict::fail("D is not the sum of its chains");

  const auto maximal = maximal_chains(x);
  std::vector<bool> hit(maximal.size(), false);
  for (std::size_t a = 0; a < cd.chains.size(); ++a) {
    Chain img;
    for (const auto& id : cd.chains[a]) img.push_back(cd.phi(id));
    // (1): the chain maps isomorphically onto its image
    for (std::size_t k = 0; k + 1 < img.size(); ++k)
      if (!x.less(x.index_of(img[k]), x.index_of(img[k + 1]))) {
        return Verdict::fail("chain " + std::to_string(a) + " is not mapped isomorphically", cd.chains[a][k],
                             cd.chains[a][k + 1]);
      }
    // (2): the image is a maximal chain
    auto it = std::lower_bound(maximal.begin(), maximal.end(), img);
    if (it == maximal.end() || *it != img) {
      return Verdict::fail("image of chain " + std::to_string(a) + " is not a maximal chain");
    }
    hit[static_cast<std::size_t>(it - maximal.begin())] = true;
  }
  // (3): every maximal chain is reached
  for (std::size_t i = 0; i < maximal.size(); ++i)
    if (!hit[i]) return Verdict::fail("maximal chain " + std::to_string(i) + " is not the image of a chain of D");
  return Verdict::pass();
}

MinMaxLiftReport verify_min_max_lifting(const ChainDecomposition& cd) {
  MinMaxLiftReport r;
  r.min_d = min_nodes(cd.d);
  r.max_d = max_nodes(cd.d);
  for (const auto& m : min_nodes(cd.target())) {
    auto pre = preimage(cd.phi, m);
    r.min_preimage.insert(pre.begin(), pre.end());
  }
  for (const auto& m : max_nodes(cd.target())) {
    auto pre = preimage(cd.phi, m);
    r.max_preimage.insert(pre.begin(), pre.end());
  }
  if (r.min_d != r.min_preimage) throw Error(ErrorKind::InvariantViolation, "min D differs from phi^-1(min X)");
  if (r.max_d != r.max_preimage) throw Error(ErrorKind::InvariantViolation, "max D differs from phi^-1(max X)");
  return r;
}

Collection decomposition_fibers(const ChainDecomposition& cd) { return fiber_collection(cd.phi); }

namespace {

// Renames F so that nodes over a single X node carry that node's id and the
// copies of a split node are x~1, x~2, ... ordered by their first chain.
SplitResult relabel_split(const ChainDecomposition& cd, const PosetMap& t, const PosetMap& f) {
  std::map<NodeId, std::size_t> chain_of;
  for (std::size_t a = 0; a < cd.chains.size(); ++a)
    for (const auto& id : cd.chains[a]) chain_of.emplace(id, a);

  const Poset& fp = f.source();
  std::vector<std::size_t> first_chain(fp.size(), cd.chains.size());
  for (std::size_t i = 0; i < t.source().size(); ++i) {
    auto& slot = first_chain[t.at(i)];
    slot = std::min(slot, chain_of.at(t.source().id(i)));
  }

  std::map<std::size_t, std::vector<std::size_t>> over;  // X index -> F indices
  for (std::size_t v = 0; v < fp.size(); ++v) over[f.at(v)].push_back(v);

  NodeSet taken(f.target().nodes().begin(), f.target().nodes().end());
  std::map<NodeId, NodeId> rename;
  for (auto& [xi, group] : over) {
    const NodeId& base = f.target().id(xi);
    if (group.size() == 1) {
      rename.emplace(fp.id(group.front()), base);
      continue;
    }
    std::sort(group.begin(), group.end(), [&](auto a, auto b) { return first_chain[a] < first_chain[b]; });
    for (std::size_t k = 0; k < group.size(); ++k) {
      NodeId name = fresh_id(base + "~" + std::to_string(k + 1), taken);
      taken.insert(name);
      rename.emplace(fp.id(group[k]), std::move(name));
    }
  }

  Poset renamed = relabel(fp, rename);
  std::vector<std::size_t> t_img(t.source().size());
  for (std::size_t i = 0; i < t_img.size(); ++i) t_img[i] = renamed.index_of(rename.at(fp.id(t.at(i))));
  std::vector<std::size_t> f_img(renamed.size());
  for (std::size_t v = 0; v < fp.size(); ++v) f_img[renamed.index_of(rename.at(fp.id(v)))] = f.at(v);

  SplitResult out;
  out.f_poset = renamed;
  out.t = PosetMap::from_indices(t.source(), renamed, std::move(t_img));
  out.f = PosetMap::from_indices(renamed, f.target(), std::move(f_img));
  return out;
}

}  // namespace

SplitResult glue_D_along_subcollection(const ChainDecomposition& cd, const Collection& subcollection) {
  const Collection fibers = decomposition_fibers(cd);
  std::vector<std::pair<NodeId, NodeSet>> chosen;  // (X node, fiber)
  for (const auto& member : subcollection) {
    if (std::find(fibers.begin(), fibers.end(), member) == fibers.end()) {
      throw Error(ErrorKind::NotASubcollection, "member is not a nontrivial fiber of the decomposition map");
    }
    chosen.emplace_back(cd.phi(*member.begin()), member);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  PosetMap t = identity(cd.d);
  for (const auto& [xnode, fiber] : chosen) {
    NodeSet img;
    for (const auto& id : fiber) img.insert(t(id));
    auto step = glue_along_complete(t.target(), img);
    t = compose(step.map, t);
  }
  Collection used;
  for (const auto& entry : chosen) used.push_back(entry.second);
  PosetMap f = induced_map(GluingWitness{t, used}, cd.phi);

  SplitResult out = relabel_split(cd, t, f);
  if (auto v = verify_gluing(out.t, used); !v) {
    throw Error(ErrorKind::InvariantViolation, "F is not a gluing of D along the chosen fibers: " + v.reason);
  }
  if (!(compose(out.f, out.t) == cd.phi)) throw Error(ErrorKind::InvariantViolation, "f ∘ t differs from phi");
  if (auto v = verify_gluing(out.f, fiber_collection(out.f)); !v) {
    throw Error(ErrorKind::InvariantViolation, "X is not a gluing of F: " + v.reason);
  }
  return out;
}

SplitResult split_for_cover(const Poset& x, const NodeId& u1, const NodeId& u2) {
  const auto i1 = x.index_of(u1);
  x.index_of(u2);
  if (!x.lower_covers(i1).empty()) throw Error(ErrorKind::NotMinimal, "'" + u1 + "' is not minimal");
  if (!x.covers(u1, u2)) throw Error(ErrorKind::NotACover, "'" + u2 + "' does not cover '" + u1 + "'");

  const auto cd = chain_decomposition(x);
  const NodeSet split_fiber = preimage(cd.phi, u1);
  if (split_fiber.size() == 1) return {x, cd.phi, identity(x)};

  Collection keep;
  for (auto& fiber : decomposition_fibers(cd))
    if (fiber != split_fiber) keep.push_back(std::move(fiber));
  SplitResult out = glue_D_along_subcollection(cd, keep);

  const NodeSet copies = preimage(out.f, u1);
  GluingWitness down{out.f, Collection{copies}};
  if (!is_height_zero_gluing(down) || !verify_gluing(down)) {
    throw Error(ErrorKind::InvariantViolation, "X is not a height-zero gluing of F along the copies of " + u1);
  }
  const Poset& fp = out.f_poset;
  for (const auto& v2 : preimage(out.f, u2))
    for (const auto& v1 : copies) {
      auto a = fp.index_of(v1);
      auto b = fp.index_of(v2);
      if (!fp.leq(a, b)) continue;
      if (fp.upper_covers(a) != std::vector<std::size_t>{b}) {
        throw Error(ErrorKind::InvariantViolation, v2 + " is not the only cover of " + v1);
      }
    }
  return out;
}

}  // namespace posetglue
