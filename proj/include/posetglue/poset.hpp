#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetglue/error.hpp"

namespace posetglue {

using NodeId = std::string;
using NodeSet = std::set<NodeId>;
using Chain = std::vector<NodeId>;  // listed bottom to top
using Relation = std::vector<std::pair<NodeId, NodeId>>;

/// Fixed-width bitset sized at runtime; used for the reachability closure.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  Bits& operator|=(const Bits& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  std::size_t count() const;
  bool operator==(const Bits&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite poset stored as its Hasse diagram.
///
/// Nodes are kept sorted by id and addressed internally by their rank in that
/// order. The cover set is the transitive reduction of whatever relation was
/// supplied to build(); the reflexive-transitive closure is precomputed, so a
/// Poset is an immutable value after construction.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `relation` on `nodes`.
  /// Throws CycleDetected, DanglingNode or DuplicateNode.
  static Poset build(const std::vector<NodeId>& nodes, const Relation& relation);
  static Poset build(const NodeSet& nodes, const Relation& relation);
  /// Index-based construction: relation pairs refer to positions in `nodes`.
  static Poset from_indices(std::vector<NodeId> nodes,
                            const std::vector<std::pair<std::size_t, std::size_t>>& relation);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::vector<NodeId>& nodes() const { return ids_; }
  const NodeId& id(std::size_t i) const { return ids_[i]; }
  bool contains(const NodeId& id) const;
  /// Throws UnknownNode.
  std::size_t index_of(const NodeId& id) const;

  bool leq(std::size_t a, std::size_t b) const { return closure_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool leq(const NodeId& a, const NodeId& b) const { return leq(index_of(a), index_of(b)); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// True iff b covers a.
  bool covers(std::size_t a, std::size_t b) const;
  bool covers(const NodeId& a, const NodeId& b) const { return covers(index_of(a), index_of(b)); }

  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }
  /// Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_indices() const { return covers_; }
  Relation cover_pairs() const;

  /// Set of nodes >= i, as a bitset over indices.
  const Bits& above(std::size_t i) const { return closure_[i]; }

  bool operator==(const Poset& other) const {
    return ids_ == other.ids_ && covers_ == other.covers_;
  }

 private:
  std::vector<NodeId> ids_;
  std::map<NodeId, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<Bits> closure_;
};

// Order-theoretic queries. All of them reject the empty poset with EmptyPoset
// and unknown ids with UnknownNode.

NodeSet min_nodes(const Poset& p);
NodeSet max_nodes(const Poset& p);
std::vector<std::size_t> min_indices(const Poset& p);
std::vector<std::size_t> max_indices(const Poset& p);

/// Length (edge count) of a longest chain from a minimal node up to x.
std::size_t height(const Poset& p, const NodeId& x);
/// Length of a longest chain from x up to a maximal node.
std::size_t coheight(const Poset& p, const NodeId& x);
std::vector<std::size_t> heights(const Poset& p);
std::vector<std::size_t> coheights(const Poset& p);
std::size_t dim(const Poset& p);

/// Every maximal chain, bottom to top, sorted lexicographically by id sequence.
std::vector<Chain> maximal_chains(const Poset& p);
/// Number of maximal chains whose length equals dim(p).
std::size_t count_longest_chains(const Poset& p);

bool is_antichain(const Poset& p, const NodeSet& s);
bool is_complete_subset(const Poset& p, const NodeSet& s);
NodeSet down_set(const Poset& p, const NodeId& x);
NodeSet up_set(const Poset& p, const NodeId& x);

/// Returns `base` if it is not in `taken`, else the first free `base~k`.
NodeId fresh_id(const NodeId& base, const NodeSet& taken);

/// The subposet induced on `s`.
Poset induced(const Poset& p, const NodeSet& s);
/// Same order, new ids. `rename` must be injective and total on p's nodes.
Poset relabel(const Poset& p, const std::map<NodeId, NodeId>& rename);

}  // namespace posetglue
