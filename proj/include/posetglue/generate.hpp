#pragma once

#include <cstdint>
#include <vector>

#include "posetglue/poset.hpp"

namespace posetglue {

/// Random DAG on v0 < v1 < ... < v{n-1}: each pair (i, j) with i < j is a
/// relation with probability p. Identical arguments give identical posets on
/// every platform. Throws InvalidArgument.
Poset random_poset(std::uint64_t seed, std::size_t node_count, double edge_probability);

/// Every poset on n nodes (1 <= n <= 6) up to isomorphism, each labelled
/// v0..v{n-1} along a linear extension, in a fixed order.
/// Throws InvalidArgument.
std::vector<Poset> enumerate_posets(std::size_t n);

}  // namespace posetglue
