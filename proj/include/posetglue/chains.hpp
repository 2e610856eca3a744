#pragma once

#include <vector>

#include "posetglue/gluing.hpp"

namespace posetglue {

/// A disjoint sum of chains D with a surjection phi: D -> X sending the
/// chains onto the maximal chains of X, one chain per maximal chain.
struct ChainDecomposition {
  Poset d;
  PosetMap phi;
  std::vector<Chain> chains;  // ids of D, one entry per chain, bottom to top

  const Poset& target() const { return phi.target(); }
};

/// D is built from fresh copies of each maximal chain of X; the node at
/// position k of chain a is named "a<a>.<k>". Throws EmptyPoset.
ChainDecomposition chain_decomposition(const Poset& x);

/// Checks the three defining conditions and surjectivity of phi.
Verdict verify_chain_decomposition(const ChainDecomposition& cd);

struct MinMaxLiftReport {
  NodeSet min_d, min_preimage;
  NodeSet max_d, max_preimage;
};
/// min D = phi^-1(min X) and max D = phi^-1(max X); InvariantViolation otherwise.
MinMaxLiftReport verify_min_max_lifting(const ChainDecomposition& cd);

/// {phi^-1(x) : |phi^-1(x)| != 1} for the decomposition map.
Collection decomposition_fibers(const ChainDecomposition& cd);

/// An intermediate poset F between D and X: t: D -> F and f: F -> X are
/// gluing maps with f ∘ t = phi.
struct SplitResult {
  Poset f_poset;
  PosetMap t;  // D -> F
  PosetMap f;  // F -> X
};

/// Glues D along the chosen fibers, one at a time in ascending order of the
/// X node they glue to. Nodes of F whose f-fiber is a single node take the X
/// id; the remaining copies of a split X node x are named x~1, x~2, ... in
/// chain order. Throws NotASubcollection.
SplitResult glue_D_along_subcollection(const ChainDecomposition& cd, const Collection& subcollection);

/// Splits the minimal node u1 so that each copy lying below u2 has u2 as its
/// only cover: glues every nontrivial fiber of the chain decomposition except
/// phi^-1(u1). When phi^-1(u1) is a single node, F = X and f is the identity.
/// Throws NotMinimal, NotACover.
SplitResult split_for_cover(const Poset& x, const NodeId& u1, const NodeId& u2);

}  // namespace posetglue
