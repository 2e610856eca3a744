#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetglue/poset.hpp"

namespace posetglue {

/// Outcome of a structural check. Failing verdicts carry the offending pair of
/// nodes when there is one.
struct Verdict {
  bool ok = true;
  std::string reason;
  std::optional<std::pair<NodeId, NodeId>> witness;

  explicit operator bool() const { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string reason) { return {false, std::move(reason), std::nullopt}; }
  static Verdict fail(std::string reason, NodeId a, NodeId b) {
    return {false, std::move(reason), std::make_pair(std::move(a), std::move(b))};
  }
};

/// A total function between the node sets of two posets. Nothing about order
/// is assumed; the verifiers below decide which qualities it has.
class PosetMap {
 public:
  PosetMap() = default;
  /// Throws NotTotal when a source node is unassigned and UnknownNode when an
  /// assignment names something outside either poset.
  PosetMap(Poset source, Poset target, const std::map<NodeId, NodeId>& assignment);
  static PosetMap from_indices(Poset source, Poset target, std::vector<std::size_t> image);

  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }

  std::size_t at(std::size_t source_index) const { return image_[source_index]; }
  const std::vector<std::size_t>& indices() const { return image_; }
  NodeId operator()(const NodeId& x) const { return target_.id(image_[source_.index_of(x)]); }
  std::map<NodeId, NodeId> assignment() const;

  bool operator==(const PosetMap&) const = default;

 private:
  Poset source_;
  Poset target_;
  std::vector<std::size_t> image_;
};

PosetMap identity(const Poset& p);
/// Inclusion of a poset whose ids all occur in `ambient`.
PosetMap inclusion(const Poset& sub, const Poset& ambient);
/// outer ∘ inner. Throws InvalidArgument when inner's target is not outer's source.
PosetMap compose(const PosetMap& outer, const PosetMap& inner);

NodeSet image(const PosetMap& f);
NodeSet preimage(const PosetMap& f, const NodeId& y);
bool is_surjective(const PosetMap& f);
bool is_injective(const PosetMap& f);

Verdict is_poset_map(const PosetMap& f);
/// Throws NotPosetMap when f is not order preserving.
Verdict is_embedding(const PosetMap& f);
/// Throws NotEmbedding when f is not an embedding.
Verdict is_saturated_embedding(const PosetMap& f);
/// Throws NotEmbedding when f is not an embedding.
Verdict is_isomorphism(const PosetMap& f);

/// Runs the whole hierarchy without throwing; later levels are reported as
/// failed with reason "skipped" once an earlier level fails.
struct MapReport {
  Verdict poset_map;
  Verdict embedding;
  Verdict saturated_embedding;
  Verdict isomorphism;
};
MapReport classify(const PosetMap& f);

Verdict is_saturated_subset(const Poset& p, const NodeSet& z);

/// Backtracking search pruned by (height, lower-cover count, upper-cover
/// count) signatures. Deterministic: candidates are tried in id order.
std::optional<PosetMap> find_isomorphism(const Poset& p, const Poset& q);
inline bool isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

}  // namespace posetglue
