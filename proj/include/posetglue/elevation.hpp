#pragma once

#include <optional>
#include <vector>

#include "posetglue/chains.hpp"

namespace posetglue {

/// Z is an elevation of X at z: r collapses the down-set of z (a height-one
/// node that is the only cover of everything below it) and e is the unique
/// section of r with e(r(z)) = z.
struct ElevationWitness {
  Poset z_poset;
  NodeId z;
  Poset x_poset;
  PosetMap r;  // Z -> X
  PosetMap e;  // X -> Z
};

Verdict verify_elevation(const ElevationWitness& w);

/// Glues the down-set of z into a node that keeps z's id.
/// Throws NotHeightOne, NotUniqueCover (naming the offending node).
ElevationWitness retract(const Poset& z_poset, const NodeId& z);

/// Grows `count` fresh minimal nodes under the minimal node p, each covered
/// only by p. Fresh ids default to p~1, p~2, ... (skipping ids in use).
/// Throws NotMinimal, InvalidArgument.
ElevationWitness elevate(const Poset& x, const NodeId& p, std::size_t count,
                         const std::vector<NodeId>& fresh_ids = {});

/// Number of minimal u < x for which x is not the only cover.
std::size_t m_count(const Poset& f, const NodeId& x);

/// Least height-one node lying on a chain of length dim(f).
/// Throws ZeroDimensional.
NodeId choose_pivot(const Poset& f);

/// F1 is a G-extension of F2: F2 --e--> Z is an elevation and Z --h--> F1 is a
/// height-zero gluing. `pivot` is the chosen node of F1 and `z` its unique
/// preimage in Z.
struct GExtension {
  Poset f1;
  Poset f2;
  Poset z_poset;
  NodeId pivot;
  NodeId z;
  PosetMap r;  // Z -> F2
  PosetMap e;  // F2 -> Z
  PosetMap h;  // Z -> F1
  std::vector<std::size_t> m_trace;  // m(pivot preimage) before each split
};

struct GExtensionOptions {
  /// After each split, reglue the copies of the split node that do not sit
  /// under the pivot (and, separately, those that do). Without this the
  /// number of longest chains can grow from one step to the next.
  bool coalesce_copies = true;
};

/// Splits the shared minima under the pivot one at a time (least first) until
/// the pivot is their only cover, then retracts the pivot's down-set.
/// Throws ZeroDimensional.
GExtension gextension_step(const Poset& f1, const GExtensionOptions& options = {});

/// Verifies both halves of a G-extension.
Verdict verify_gextension(const GExtension& g);

struct DimensionReduction {
  std::vector<Poset> posets;  // F1, F2, ..., Fn with dim Fn < dim F1
  std::vector<GExtension> steps;
};

/// Repeats gextension_step until the dimension drops, asserting that
/// (dim, number of longest chains) decreases lexicographically at each step.
/// Throws ZeroDimensional, InvariantViolation.
DimensionReduction reduce_dimension(const Poset& f1, const GExtensionOptions& options = {});

struct WrapOptions {
  bool single_max = false;
  bool single_min = false;
  std::size_t min_height = 0;
  std::size_t min_dim = 0;
};

struct WrapResult {
  Poset k;
  PosetMap inclusion;  // X -> K
};

/// Places X inside K as a saturated subset: optional fresh top above every
/// maximal node, optional fresh bottom (a chain when min_height > 1) below
/// every minimal node, per-minimum padding chains for min_height otherwise,
/// and a chain on top of a longest chain when dim K < min_dim.
WrapResult wrap(const Poset& x, const WrapOptions& options);

}  // namespace posetglue
