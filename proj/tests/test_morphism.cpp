#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "posetglue/generate.hpp"

using namespace posetglue;
using fixtures::kind_of;

namespace {

Poset chain(std::size_t n) {
  std::vector<NodeId> ids;
  Relation rel;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("c" + std::to_string(i));
    if (i) rel.emplace_back(ids[i - 1], ids[i]);
  }
  return Poset::build(ids, rel);
}

}  // namespace

TEST_CASE("constructing maps checks totality") {
  const Poset v = fixtures::load("fig6-v.poset");
  CHECK(kind_of([&] { PosetMap(v, v, {{"1", "1"}}); }) == ErrorKind::NotTotal);
  CHECK(kind_of([&] { PosetMap(v, v, {{"1", "1"}, {"2", "2"}, {"4", "q"}}); }) == ErrorKind::UnknownNode);
  CHECK(kind_of([&] { PosetMap(v, v, {{"1", "1"}, {"2", "2"}, {"4", "4"}, {"q", "1"}}); }) ==
        ErrorKind::UnknownNode);
}

TEST_CASE("verifier hierarchy on the V into the right-hand poset") {
  const Poset v = fixtures::load("fig6-v.poset");
  const Poset y = fixtures::load("fig4-right.poset");
  const PosetMap good(v, y, {{"1", "1"}, {"2", "2"}, {"4", "4"}});
  auto r = classify(good);
  CHECK(r.poset_map);
  CHECK(r.embedding);
  CHECK(r.saturated_embedding);
  CHECK_FALSE(r.isomorphism);

  const PosetMap skip(v, y, {{"1", "1"}, {"2", "2"}, {"4", "5"}});
  r = classify(skip);
  CHECK(r.embedding);
  CHECK_FALSE(r.saturated_embedding);
  REQUIRE(r.saturated_embedding.witness);
  CHECK(*r.saturated_embedding.witness == std::make_pair(NodeId("4"), NodeId("1")));

  const PosetMap flat(v, y, {{"1", "1"}, {"2", "1"}, {"4", "1"}});
  CHECK(is_poset_map(flat));
  CHECK_FALSE(classify(flat).embedding);
  CHECK(kind_of([&] { is_saturated_embedding(flat); }) == ErrorKind::NotEmbedding);

  const PosetMap upside(v, y, {{"1", "6"}, {"2", "1"}, {"4", "1"}});
  CHECK_FALSE(is_poset_map(upside));
  CHECK(kind_of([&] { is_embedding(upside); }) == ErrorKind::NotPosetMap);
  CHECK(classify(upside).embedding.reason == "skipped");
}

TEST_CASE("identity, composition, image and preimage") {
  const Poset c = chain(3);
  const PosetMap id = identity(c);
  CHECK(is_isomorphism(id));
  const PosetMap squash(c, c, {{"c0", "c0"}, {"c1", "c0"}, {"c2", "c2"}});
  CHECK(compose(squash, id) == squash);
  CHECK(image(squash) == NodeSet{"c0", "c2"});
  CHECK(preimage(squash, "c0") == NodeSet{"c0", "c1"});
  CHECK_FALSE(is_surjective(squash));
  CHECK_FALSE(is_injective(squash));
  CHECK(kind_of([&] { compose(identity(chain(2)), squash); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("saturated subsets") {
  const Poset x = fixtures::load("fig1.poset");
  CHECK(is_saturated_subset(x, {"10", "9", "8"}));
  CHECK_FALSE(is_saturated_subset(x, {"10", "8"}));
  CHECK(is_saturated_subset(x, {"1", "2", "6"}));
}

TEST_CASE("isomorphism search matches brute force") {
  CHECK(find_isomorphism(fixtures::load("fig5-j.poset"), fixtures::load("fig5-j.poset")));
  CHECK_FALSE(isomorphic(fixtures::load("fig5-f2.poset"), fixtures::load("fig5-panel4.poset")));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const Poset p = random_poset(seed, n, 0.35);
    const Poset q = random_poset(seed * 7919 + 1, n, 0.35);
    const auto found = find_isomorphism(p, q);
    REQUIRE(found.has_value() == oracle::isomorphic(p, q));
    if (found) REQUIRE(is_isomorphism(*found));
  }
}

TEST_CASE("isomorphism of a relabelled poset is found") {
  const Poset x = fixtures::load("fig1.poset");
  std::map<NodeId, NodeId> rename;
  for (const auto& id : x.nodes()) rename.emplace(id, "n" + id);
  const auto f = find_isomorphism(x, relabel(x, rename));
  REQUIRE(f);
  CHECK(is_isomorphism(*f));
}
