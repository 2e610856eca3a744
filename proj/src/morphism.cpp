#include "posetglue/morphism.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace posetglue {

PosetMap::PosetMap(Poset source, Poset target, const std::map<NodeId, NodeId>& assignment)
    : source_(std::move(source)), target_(std::move(target)) {
  image_.resize(source_.size());
  for (std::size_t i = 0; i < source_.size(); ++i) {
    auto it = assignment.find(source_.id(i));
    if (it == assignment.end()) {
      throw Error(ErrorKind::NotTotal, "map leaves '" + source_.id(i) + "' unassigned");
    }
    image_[i] = target_.index_of(it->second);
  }
  for (const auto& [from, to] : assignment) {
    if (!source_.contains(from)) throw Error(ErrorKind::UnknownNode, "map assigns unknown node '" + from + "'");
  }
}

PosetMap PosetMap::from_indices(Poset source, Poset target, std::vector<std::size_t> image) {
  if (image.size() != source.size()) throw Error(ErrorKind::NotTotal, "image vector has wrong length");
  for (auto t : image)
    if (t >= target.size()) throw Error(ErrorKind::UnknownNode, "image index out of range");
  PosetMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.image_ = std::move(image);
  return f;
}

std::map<NodeId, NodeId> PosetMap::assignment() const {
  std::map<NodeId, NodeId> out;
  for (std::size_t i = 0; i < source_.size(); ++i) out.emplace(source_.id(i), target_.id(image_[i]));
  return out;
}

PosetMap identity(const Poset& p) {
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) img[i] = i;
  return PosetMap::from_indices(p, p, std::move(img));
}

PosetMap inclusion(const Poset& sub, const Poset& ambient) {
  std::vector<std::size_t> img(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) img[i] = ambient.index_of(sub.id(i));
  return PosetMap::from_indices(sub, ambient, std::move(img));
}

PosetMap compose(const PosetMap& outer, const PosetMap& inner) {
  if (!(inner.target() == outer.source())) {
    throw Error(ErrorKind::InvalidArgument, "cannot compose: inner target differs from outer source");
  }
  std::vector<std::size_t> img(inner.source().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = outer.at(inner.at(i));
  return PosetMap::from_indices(inner.source(), outer.target(), std::move(img));
}

NodeSet image(const PosetMap& f) {
  NodeSet out;
  for (auto t : f.indices()) out.insert(f.target().id(t));
  return out;
}

NodeSet preimage(const PosetMap& f, const NodeId& y) {
  auto yi = f.target().index_of(y);
  NodeSet out;
  for (std::size_t i = 0; i < f.source().size(); ++i)
    if (f.at(i) == yi) out.insert(f.source().id(i));
  return out;
}

bool is_surjective(const PosetMap& f) { return image(f).size() == f.target().size(); }

bool is_injective(const PosetMap& f) { return image(f).size() == f.source().size(); }

Verdict is_poset_map(const PosetMap& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.leq(a, b) && !t.leq(f.at(a), f.at(b))) {
        return Verdict::fail("order not preserved: " + s.id(a) + " <= " + s.id(b) + " but images are not",
                             s.id(a), s.id(b));
      }
  return Verdict::pass();
}

Verdict is_embedding(const PosetMap& f) {
  if (auto v = is_poset_map(f); !v) throw Error(ErrorKind::NotPosetMap, v.reason);
  const auto& s = f.source();
  const auto& t = f.target();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (t.leq(f.at(a), f.at(b)) && !s.leq(a, b)) {
        return Verdict::fail("order not reflected: images of " + s.id(a) + ", " + s.id(b) +
                                 " are comparable but the nodes are not",
                             s.id(a), s.id(b));
      }
  return Verdict::pass();
}

Verdict is_saturated_embedding(const PosetMap& f) {
  if (auto v = is_embedding(f); !v) throw Error(ErrorKind::NotEmbedding, v.reason);
  const auto& s = f.source();
  const auto& t = f.target();
  for (auto [a, b] : s.cover_indices())
    if (!t.covers(f.at(a), f.at(b))) {
      return Verdict::fail(s.id(b) + " covers " + s.id(a) + " but " + t.id(f.at(b)) + " does not cover " +
                               t.id(f.at(a)),
                           s.id(a), s.id(b));
    }
  return Verdict::pass();
}

Verdict is_isomorphism(const PosetMap& f) {
  if (auto v = is_embedding(f); !v) throw Error(ErrorKind::NotEmbedding, v.reason);
  if (!is_surjective(f)) return Verdict::fail("embedding is not onto the target");
  return Verdict::pass();
}

MapReport classify(const PosetMap& f) {
  MapReport r;
  const auto skipped = Verdict::fail("skipped");
  r.poset_map = is_poset_map(f);
  if (!r.poset_map) {
    r.embedding = r.saturated_embedding = r.isomorphism = skipped;
    return r;
  }
  r.embedding = is_embedding(f);
  if (!r.embedding) {
    r.saturated_embedding = r.isomorphism = skipped;
    return r;
  }
  r.saturated_embedding = is_saturated_embedding(f);
  r.isomorphism = is_isomorphism(f);
  return r;
}

Verdict is_saturated_subset(const Poset& p, const NodeSet& z) {
  const Poset sub = induced(p, z);
  for (auto [a, b] : sub.cover_indices())
    if (!p.covers(sub.id(a), sub.id(b))) {
      return Verdict::fail(sub.id(b) + " covers " + sub.id(a) + " inside the subset but not in the poset",
                           sub.id(a), sub.id(b));
    }
  return Verdict::pass();
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Poset& p) {
  auto h = heights(p);
  std::vector<Signature> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = {h[i], p.lower_covers(i).size(), p.upper_covers(i).size()};
  return out;
}

}  // namespace

std::optional<PosetMap> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.cover_indices().size() != q.cover_indices().size()) return std::nullopt;
  if (p.empty()) return PosetMap::from_indices(p, q, {});
  auto sp = signatures(p);
  auto sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t n = p.size();
  // Assign the most constrained nodes first: rarest signature, then id order.
  std::map<Signature, std::size_t> freq;
  for (const auto& s : sp) ++freq[s];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return freq[sp[a]] < freq[sp[b]]; });

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    auto v = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sq[w] != sp[v]) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < k && consistent; ++j) {
        auto u = order[j];
        consistent = p.leq(u, v) == q.leq(image[u], w) && p.leq(v, u) == q.leq(w, image[u]);
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = true;
      if (extend(k + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return PosetMap::from_indices(p, q, std::move(image));
}

}  // namespace posetglue
