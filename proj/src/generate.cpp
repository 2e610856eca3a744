#include "posetglue/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "posetglue/error.hpp"

namespace posetglue {

namespace {

std::vector<NodeId> names(std::size_t n) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

}  // namespace

Poset random_poset(std::uint64_t seed, std::size_t node_count, double edge_probability) {
  if (node_count == 0) throw Error(ErrorKind::InvalidArgument, "node count must be at least 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "edge probability must lie in [0, 1]");
  }
  // std::uniform_real_distribution is implementation-defined; use the top 53 bits directly.
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < node_count; ++i)
    for (std::size_t j = i + 1; j < node_count; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_probability) rel.emplace_back(i, j);
    }
  return Poset::from_indices(names(node_count), rel);
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n == 0 || n > 6) throw Error(ErrorKind::InvalidArgument, "enumeration supports 1 to 6 nodes");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) rel[pairs[k].first][pairs[k].second] = true;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = i + 1; j < n && closed; ++j)
        for (std::size_t k = j + 1; k < n && closed; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) closed = false;
    if (!closed) continue;

    std::uint64_t canon = ~std::uint64_t{0};
    for (const auto& pi : perms) {
      std::uint64_t code = 0;
      for (const auto& [i, j] : pairs)
        if (rel[i][j]) code |= std::uint64_t{1} << (pi[i] * n + pi[j]);
      canon = std::min(canon, code);
    }
    if (!seen.insert(canon).second) continue;

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [i, j] : pairs)
      if (rel[i][j]) edges.emplace_back(i, j);
    out.push_back(Poset::from_indices(names(n), edges));
  }
  return out;
}

}  // namespace posetglue
