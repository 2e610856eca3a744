#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "posetglue/morphism.hpp"
#include "posetglue/poset.hpp"

namespace posetglue {

using Collection = std::vector<NodeSet>;

/// A surjective poset map g: X -> Y together with the collection of subsets
/// of X it identifies.
struct GluingWitness {
  PosetMap map;
  Collection collection;

  const Poset& source() const { return map.source(); }
  const Poset& target() const { return map.target(); }
};

/// Quotient of X by the complete subset S: S becomes one node, every other
/// node stays a singleton class, and [x] <= [y] iff x <= y or x <= s1 and
/// s2 <= y for some s1, s2 in S. The class of S is named `class_name` when
/// given, else by its least member (that id cannot clash with a survivor).
/// Throws EmptySet, UnknownNode, NotComplete.
GluingWitness glue_along_complete(const Poset& x, const NodeSet& s,
                                  const std::optional<NodeId>& class_name = std::nullopt);

/// Unions overlapping members (transitively) and drops empty ones; result is
/// sorted by least member.
Collection merge_overlapping(const Collection& c);

/// Glues the merged members one at a time, in order of least member, checking
/// each member's image for completeness before gluing it.
/// Throws UnknownNode, NotComplete.
GluingWitness glue_along_collection(const Poset& x, const Collection& c);

bool is_height_zero_gluing(const GluingWitness& w);

/// The unique poset map phi: Y -> Z with phi ∘ g = h.
/// Throws NotPosetMap, NotCompatible, InvalidArgument (h has the wrong source).
PosetMap induced_map(const GluingWitness& w, const PosetMap& h);

/// Decides whether (X, Y, g) is a gluing along `c`: checks the two fiber
/// conditions directly, then builds the canonical quotient along `c` and
/// requires the comparison map to be an isomorphism.
Verdict verify_gluing(const PosetMap& g, const Collection& c);
inline Verdict verify_gluing(const GluingWitness& w) { return verify_gluing(w.map, w.collection); }

/// {g^-1(y) : |g^-1(y)| != 1}, sorted by least member.
Collection fiber_collection(const PosetMap& g);

using CSequence = std::vector<NodeId>;

bool is_c_sequence(const Poset& x, const Collection& c, const CSequence& seq);

/// Shortest walk from `from` to `to` whose steps go up in X or jump inside a
/// member of `c`. Throws OverlappingCollection unless members are disjoint.
std::optional<CSequence> find_c_sequence(const Poset& x, const Collection& c, const NodeId& from,
                                         const NodeId& to);

/// Least pair (x', y') with y' covering x' in the source and images (gx, gy).
/// Throws NotAntichainCollection, NotACover.
std::pair<NodeId, NodeId> lift_cover(const GluingWitness& w, const NodeId& gx, const NodeId& gy);

struct DimMinReport {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  NodeSet source_min;
  NodeSet min_preimage;  // g^-1(min Y)
};

/// Throws NotHeightZero when the witness glues non-minimal nodes and
/// InvariantViolation if dimension or minima are not preserved.
DimMinReport check_dim_min_preservation(const GluingWitness& w);

}  // namespace posetglue
